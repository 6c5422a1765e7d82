import os

THREADS = int(os.environ.get("K3CR3_THREADS", "1"))
OUTPUT_DATA_DIR = "output/data"
CATALOG_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "catalog")
CATALOG_PATH = os.path.join(CATALOG_DIR, "catalog.json")
EXPECTED_DIR = os.path.join(CATALOG_DIR, "expected")

SEED = 42
PROGRESS = True
