import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache

import config
from abelian import AbelianGroup
from catalog import tables
from lattice import Lattice


@dataclass(frozen=True)
class CatalogEntry:
    """A K3 group with its symplectic part and invariant lattice data"""

    group: AbelianGroup
    symplectic_part: AbelianGroup
    nonsymplectic_order: int
    invariant_rank_range: tuple
    gram_options: tuple = field(default=())

    @classmethod
    def from_record(cls, record):
        return cls(
            group=AbelianGroup.parse(record["group"]),
            symplectic_part=AbelianGroup.parse(record["symplectic_part"]),
            nonsymplectic_order=record["nonsymplectic_order"],
            invariant_rank_range=tuple(record["invariant_rank_range"]),
            gram_options=tuple(Lattice(gram) for gram in record["gram_options"]),
        )

    @property
    def splits_as_product(self):
        """Whether |H| = |H_s| m, which the printed (Z/2)^5 entry does not satisfy"""
        return self.group.order == self.symplectic_part.order * self.nonsymplectic_order


DU_VAL_KINDS = ("A", "D", "E")


@dataclass(frozen=True, order=True)
class DuValType:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in DU_VAL_KINDS:
            raise ValueError(f"Unknown du Val kind '{self.kind}'")
        if self.kind == "A" and self.n < 1:
            raise ValueError(f"A_n needs n >= 1, got {self.n}")
        if self.kind == "D" and self.n < 4:
            raise ValueError(f"D_n needs n >= 4, got {self.n}")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise ValueError(f"E_n needs n in 6, 7, 8, got {self.n}")

    @classmethod
    def parse(cls, text):
        text = text.strip().replace("_", "")
        return cls(text[0].upper(), int(text[1:]))

    @property
    def curve_count(self):
        return self.n

    @property
    def pi1ab(self):
        return du_val_pi1ab(self)

    def __str__(self):
        return f"{self.kind}{self.n}"


def du_val_pi1ab(t):
    """The abelianised local fundamental group of a du Val singularity"""
    if t.kind == "A":
        return AbelianGroup.cyclic(t.n + 1)
    if t.kind == "D":
        # binary dihedral of order 4(n - 2)
        return AbelianGroup.parse("2,2" if t.n % 2 == 0 else "4")
    return AbelianGroup.cyclic({6: 3, 7: 2, 8: 1}[t.n])


def is_cr1_group(g):
    """Whether g is a finite abelian subgroup of PGL_2: cyclic or (Z/2)^2"""
    return g.is_cyclic or g == AbelianGroup.parse("2,2")


def is_cr2_group(g):
    """Whether g belongs to one of the five families of abelian plane Cremona groups"""
    factors = g.invariant_factors
    if len(factors) <= 2:
        return True
    if len(factors) == 3 and factors[:2] == [2, 2] and factors[2] % 2 == 0:
        return True
    return factors in ([2, 4, 4], [3, 3, 3], [2, 2, 2, 2])


def nikulin_symplectic():
    return {AbelianGroup.parse(text) for text in tables.NIKULIN}


def maximal_k3_groups():
    return {AbelianGroup.parse(text) for text in tables.MAXIMAL_K3}


@lru_cache(maxsize=None)
def exceptional_six():
    """The six maximal K3 groups that are not plane Cremona groups, in printed order"""
    return [CatalogEntry.from_record(record) for record in tables.EXCEPTIONAL_SIX]


def exceptional_entry(h):
    """The catalog entry of one of the six groups

    Raises
    ------
        ValueError
            Raises a value error if h is not one of the six
    """
    for entry in exceptional_six():
        if entry.group == h:
            return entry
    raise ValueError(f"{h} is not one of the six K3 groups outside the plane Cremona group")


def symplectic_fixed_count(order):
    """Number of fixed points of a symplectic automorphism of the given order"""
    if order not in tables.FIXED_COUNTS:
        raise ValueError(f"Symplectic automorphisms have order 2 to 8, got {order}")
    return tables.FIXED_COUNTS[order]


@lru_cache(maxsize=None)
def k3_subgroup_classes():
    """Every isomorphism class embedding in one of the maximal K3 groups"""
    classes = set()
    for g in maximal_k3_groups():
        classes.update(g.subgroup_classes())
    return frozenset(classes)


def k3_admissible(g):
    return any(g.embeds_in(h) for h in maximal_k3_groups())


def build_document():
    """The catalog as the plain structure exported to catalog.json"""
    return {
        "cr2_families": tables.CR2_FAMILIES,
        "nikulin": tables.NIKULIN,
        "maximal_k3": tables.MAXIMAL_K3,
        "exceptional_six": tables.EXCEPTIONAL_SIX,
        "du_val": tables.DU_VAL,
        "fixed_counts": {str(k): v for k, v in tables.FIXED_COUNTS.items()},
    }


def canonical_json(document):
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def catalog_checksum(document=None):
    document = build_document() if document is None else document
    return hashlib.sha256(canonical_json(document).encode("utf-8")).hexdigest()


def load_catalog(path=config.CATALOG_PATH):
    with open(path, encoding="utf-8") as file:
        return json.load(file)
