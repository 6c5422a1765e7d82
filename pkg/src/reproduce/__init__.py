import os

from joblib import Parallel, delayed

import config
from reproduce.basket_targets import HalfPoints, HigherIndex, Table6, Table10, Table11
from reproduce.group_targets import (
    Fermat,
    LargeH0,
    MaximalK3,
    SplitExtensions,
    Table1,
    Table2,
)
from reproduce.lattice_targets import InvariantLattices, OrbitSandwich
from reproduce.target import Target, TargetResult

TARGETS = {
    target.name: target
    for target in (
        Table1,
        Table2,
        MaximalK3,
        SplitExtensions,
        LargeH0,
        Table6,
        Table10,
        Table11,
        HalfPoints,
        OrbitSandwich,
        InvariantLattices,
        Fermat,
        HigherIndex,
    )
}


def get_target(name):
    if name not in TARGETS:
        raise ValueError(f"Unknown target '{name}', choose from {', '.join(TARGETS)}")
    return TARGETS[name]()


def run_target(name, bless=False):
    return get_target(name).run(bless)


def run_targets(names=None, bless=False, threads=config.THREADS):
    """Run several targets, in the given order, on a pool of threads"""
    names = list(TARGETS) if names is None else list(names)
    for name in names:
        get_target(name)
    return Parallel(n_jobs=threads, prefer="threads")(
        delayed(run_target)(name, bless) for name in names
    )


def save_result(result, directory=config.OUTPUT_DATA_DIR):
    """Write the rows of a result to <directory>/<target>.csv"""
    os.makedirs(directory, exist_ok=True)
    filename = os.path.join(directory, f"{result.name}.csv")
    result.to_frame().to_csv(filename, index=False)
    return filename
