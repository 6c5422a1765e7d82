from functools import total_ordering


@total_ordering
class Partition:
    def __init__(self, parts=()):
        """A Young diagram given by its row lengths

        Parameters
        ----------
            parts : iterable of int
                The row lengths, in any order. Zero rows are dropped

        Raises
        ------
            ValueError
                Raises a value error if a row length is negative
        """
        parts = [int(part) for part in parts]
        if any(part < 0 for part in parts):
            raise ValueError(f"A partition can not have negative parts, got {parts}")
        self._parts = tuple(sorted((part for part in parts if part), reverse=True))

    @classmethod
    def parse(cls, text):
        """Read a partition from its bracketed form, e.g. "[3,1,1]"

        Parameters
        ----------
            text : str
                The bracketed, comma separated list of parts

        Returns
        -------
            partition : Partition
                The parsed partition
        """
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"Partitions are written as '[3,1,1]', got '{text}'")
        body = body[1:-1].strip()
        if not body:
            return cls()
        return cls(int(part) for part in body.split(","))

    @property
    def parts(self):
        return self._parts

    @property
    def size(self):
        return sum(self._parts)

    @property
    def length(self):
        return len(self._parts)

    @property
    def conjugate(self):
        """The transposed diagram, whose i-th row is the i-th column of this one"""
        if not self._parts:
            return Partition()
        return Partition(
            sum(1 for part in self._parts if part > column)
            for column in range(self._parts[0])
        )

    def row(self, i):
        """Length of row i, zero past the last row"""
        return self._parts[i] if i < len(self._parts) else 0

    def contains(self, other):
        """Whether the diagram of other fits inside this diagram"""
        return other.length <= self.length and all(
            part <= self.row(i) for i, part in enumerate(other.parts)
        )

    def sub_partitions(self):
        """All partitions whose diagram fits inside this one, largest rows first"""

        def fill(i, bound):
            if i == self.length:
                yield ()
                return
            for part in range(min(bound, self.row(i)), -1, -1):
                if part == 0:
                    yield ()
                    continue
                for rest in fill(i + 1, part):
                    yield (part,) + rest

        return [Partition(parts) for parts in fill(0, self.row(0))]

    @staticmethod
    def all_of_size(n, max_part=None, max_length=None):
        """All partitions of n, optionally bounded in part size and length

        Parameters
        ----------
            n : int
                The size of the partitions
            max_part : int/None
                The largest allowed part
            max_length : int/None
                The largest allowed number of parts

        Returns
        -------
            partitions : list of Partition
                The partitions in reverse lexicographic order
        """
        max_part = n if max_part is None else max_part
        max_length = n if max_length is None else max_length

        def fill(remaining, bound, slots):
            if remaining == 0:
                yield ()
                return
            if slots == 0:
                return
            for part in range(min(bound, remaining), 0, -1):
                for rest in fill(remaining - part, part, slots - 1):
                    yield (part,) + rest

        return [Partition(parts) for parts in fill(n, max_part, max_length)]

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self._parts == other._parts

    def __lt__(self, other):
        return self._parts < other._parts

    def __hash__(self):
        return hash(self._parts)

    def __str__(self):
        return "[" + ",".join(str(part) for part in self._parts) + "]"

    def __repr__(self):
        return f"Partition({list(self._parts)})"
