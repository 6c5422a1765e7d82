MIYAOKA_BOUND = 24
MAX_BASKET_INDEX = 24
MAX_BASKET_POINTS = 15
PICARD_BOUND = 20
DEFAULT_H0 = 1
NONSYMPLECTIC_ORDERS = (1, 2, 3, 4, 6, 8)
