from config.abelian import *
from config.baskets import *
from config.reproduce import *
