from partitions.partition import Partition
from partitions.littlewood_richardson import lr_coefficient, lr_support
