from catalog import exceptional_entry
from abelian import AbelianGroup
from lattice import Lattice, orbit_class_lattice_check
from reproduce.target import Target

# Nine curves over the nine half points, on the hyperbolic plane scaled by 3
ORBIT_SIZE = 9
CURVE_SELF_INT = -2 * ORBIT_SIZE
INVARIANT_GRAM = [[0, 3], [3, 0]]
APPENDIX_GROUPS = ("2,2,2,2,2", "2,2,2,4")


class OrbitSandwich(Target):
    name = "prop8_2"
    description = "Middle lattices between mu times the invariant lattice and itself"

    def rows(self):
        invariant = Lattice(INVARIANT_GRAM)
        rows = []
        for mu in (2, 3):
            result = orbit_class_lattice_check(mu, ORBIT_SIZE, CURVE_SELF_INT, invariant)
            rows.append(
                {
                    "key": f"mu={mu}",
                    "inner_determinant": invariant.scale(mu).determinant,
                    "a_bound": result.a_bound,
                    "feasible": result.feasible,
                }
            )
        return rows


class InvariantLattices(Target):
    name = "appendix"
    description = "The possible invariant lattices of the two elementary groups"

    def rows(self):
        rows = []
        for text in APPENDIX_GROUPS:
            entry = exceptional_entry(AbelianGroup.parse(text))
            low, high = entry.invariant_rank_range
            for i, lattice in enumerate(entry.gram_options, start=1):
                rows.append(
                    {
                        "key": f"{text}#{i}",
                        "rank": lattice.rank,
                        "even": lattice.is_even,
                        "hyperbolic": lattice.signature == (1, lattice.rank - 1),
                        "rank_in_range": low <= lattice.rank <= high,
                    }
                )
        return rows

    def summary(self, rows):
        valid = sum(row["even"] and row["hyperbolic"] and row["rank_in_range"] for row in rows)
        return f"{valid} of {len(rows)} lattices are even, hyperbolic and of allowed rank"
