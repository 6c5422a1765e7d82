MAX_ORACLE_ORDER = 128
EMBEDDING_TEST_ORDER = 64
