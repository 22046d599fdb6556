"""Finite group presentations and Wirtinger presentations from diagrams.

The presentations handled here are deficiency-one presentations of knot
groups: n generators, n-1 relators.  Wirtinger presentations arise from a
planar diagram, with one meridional generator per arc and one conjugation
relator per crossing (one crossing's relator is redundant and dropped).

PD codes follow the edge-numbering convention: a diagram with n crossings
has 2n edges numbered 1..2n along the orientation, and each crossing is a
4-tuple (a, b, c, d) listing the edges counterclockwise starting from the
incoming under-edge a.  The under-strand runs a -> c; edges b and d carry
the over-strand, and which of them is incoming is decided by edge
succession mod 2n.  The handedness convention is certified downstream by
Alexander polynomial fixtures, not by the labeling itself (the mirror
convention would produce the mirror knot's group, with the same Alexander
polynomial).
"""

from __future__ import annotations

import string

from .errors import ParseError
from .words import FreeWord

_DEFAULT_NAMES = string.ascii_lowercase


class Presentation:
    """A finite presentation with named generators.

    wirtinger is recorded metadata only: it asserts that every generator is
    conjugate to every other (true for presentations built from diagrams).
    Parsed presentations infer it from relator exponent sums vanishing,
    which is the homological shadow of the property, not a proof of it.
    """

    def __init__(self, num_generators: int, relators: list[FreeWord],
                 names: list[str] | None = None, wirtinger: bool = False):
        if names is None:
            if num_generators > len(_DEFAULT_NAMES):
                names = ["x%d" % i for i in range(num_generators)]
            else:
                names = list(_DEFAULT_NAMES[:num_generators])
        if len(names) != num_generators:
            raise ParseError("need %d generator names, got %d"
                             % (num_generators, len(names)))
        if len(set(names)) != num_generators:
            raise ParseError("duplicate generator names")
        for r in relators:
            if r.max_generator() >= num_generators:
                raise ParseError("relator uses a generator outside the list")
            if r.is_identity():
                raise ParseError("relator freely reduces to the identity")
        self.num_generators = num_generators
        self.relators = list(relators)
        self.names = list(names)
        self.wirtinger = wirtinger

    @property
    def deficiency_one(self) -> bool:
        return len(self.relators) == self.num_generators - 1

    def require_deficiency_one(self):
        if not self.deficiency_one:
            raise ParseError(
                "presentation has %d generators and %d relators; "
                "deficiency one required" % (self.num_generators, len(self.relators)))

    def word(self, text: str) -> FreeWord:
        """Parse a word over this presentation's generator names."""
        return FreeWord.from_string(text, self.names)

    def __repr__(self) -> str:
        rels = ", ".join(r.to_string(self.names) for r in self.relators)
        return "<Presentation gens=%s rels=[%s]>" % (" ".join(self.names), rels)


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    One line "gens: <name> <name> ..." (single-letter lowercase names),
    then one line "rel: <word>" per relator, where uppercase letters denote
    inverse generators.  Blank lines and lines starting with '#' are skipped.
    """
    names: list[str] | None = None
    relators: list[FreeWord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            if names is not None:
                raise ParseError("line %d: duplicate gens: line" % lineno)
            names = line[len("gens:"):].split()
            for nm in names:
                if len(nm) != 1 or not nm.islower() or not nm.isalpha():
                    raise ParseError("line %d: generator names must be single "
                                     "lowercase letters, got %r" % (lineno, nm))
            if not names:
                raise ParseError("line %d: empty generator list" % lineno)
        elif line.startswith("rel:"):
            if names is None:
                raise ParseError("line %d: rel: before gens:" % lineno)
            body = line[len("rel:"):].strip()
            w = FreeWord.from_string(body, names)
            if w.is_identity():
                raise ParseError("line %d: relator %r freely reduces to the "
                                 "identity" % (lineno, body))
            relators.append(w)
        else:
            raise ParseError("line %d: expected 'gens:' or 'rel:', got %r"
                             % (lineno, line))
    if names is None:
        raise ParseError("no gens: line found")
    wirtinger = all(r.exponent_sum() == 0 for r in relators) and bool(relators)
    return Presentation(len(names), relators, names, wirtinger=wirtinger)


def presentation_to_text(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.names)]
    lines += ["rel: " + r.to_string(p.names) for r in p.relators]
    return "\n".join(lines) + "\n"


def parse_pd(text: str) -> list[tuple[int, int, int, int]]:
    """Parse a PD file: one crossing per line, four comma-separated integers."""
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [s.strip() for s in line.split(",")]
        if len(parts) != 4:
            raise ParseError("line %d: PD crossing needs 4 entries, got %d"
                             % (lineno, len(parts)))
        try:
            a, b, c, d = (int(s) for s in parts)
        except ValueError:
            raise ParseError("line %d: non-integer PD entry" % lineno) from None
        crossings.append((a, b, c, d))
    if not crossings:
        raise ParseError("empty PD code")
    return crossings


def pd_to_wirtinger(pd: list[tuple[int, int, int, int]]) -> Presentation:
    """Build the Wirtinger presentation of the knot group from a PD code.

    Arcs are the over-strands: edges b and d of every crossing are merged.
    Each crossing contributes the relator  o^e u o^-e v^-1  where u is the
    arc of the incoming under-edge, v the arc of the outgoing under-edge,
    o the over-arc, and e = +-1 by the over-strand's travel direction.
    One relator (the last crossing's) is redundant and dropped, so the
    result has deficiency one.  A one-crossing diagram therefore yields the
    free presentation of Z on a single generator.
    """
    n = len(pd)
    if n == 0:
        raise ParseError("empty PD code")
    nedges = 2 * n
    seen: dict[int, int] = {}
    for a, b, c, d in pd:
        for e in (a, b, c, d):
            if not 1 <= e <= nedges:
                raise ParseError("PD edge label %d out of range 1..%d" % (e, nedges))
            seen[e] = seen.get(e, 0) + 1
    bad = [e for e in range(1, nedges + 1) if seen.get(e, 0) != 2]
    if bad:
        raise ParseError("PD edge labels %s do not appear exactly twice" % bad)

    # Union-find over edges; merging b,d at every crossing glues edges into arcs.
    parent = list(range(nedges + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int):
        parent[find(x)] = find(y)

    for a, b, c, d in pd:
        # Under-strand continuity: c must be the successor edge of a.
        if c != a % nedges + 1 and a != c % nedges + 1:
            raise ParseError("crossing %s: under-edges %d,%d are not "
                             "consecutive" % ((a, b, c, d), a, c))
        union(b, d)

    arcs = sorted({find(e) for e in range(1, nedges + 1)})
    if len(arcs) != n:
        raise ParseError("PD code yields %d arcs for %d crossings; "
                         "not a knot diagram" % (len(arcs), n))
    arc_index = {root: i for i, root in enumerate(arcs)}

    def gen(edge: int) -> int:
        return arc_index[find(edge)] + 1   # 1-based Tietze letter

    relators = []
    for a, b, c, d in pd:
        # Over-strand travel: exactly one of b,d is the other's successor.
        if d == b % nedges + 1:
            sign = -1          # over-strand runs b -> d
        elif b == d % nedges + 1:
            sign = 1           # over-strand runs d -> b
        else:
            raise ParseError("crossing %s: over-edges %d,%d are not "
                             "consecutive" % ((a, b, c, d), b, d))
        o, u, v = gen(b), gen(a), gen(c)
        w = FreeWord([sign * o, u, -sign * o, -v])
        if not w.is_identity():       # kinks relate an arc to itself
            relators.append(w)

    # Any single Wirtinger relator is a consequence of the others; drop one
    # unless a trivial kink relator already served as the drop.
    if len(relators) == n:
        relators = relators[:-1]
    if len(relators) != n - 1:
        raise ParseError("PD code yields %d independent relators for %d "
                         "arcs; cannot form a deficiency-one presentation"
                         % (len(relators), n))
    names = None if n <= len(_DEFAULT_NAMES) else ["x%d" % i for i in range(n)]
    return Presentation(n, relators, names, wirtinger=True)
