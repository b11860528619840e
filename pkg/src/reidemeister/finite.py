"""Brute-force twisted conjugacy on finite groups.

The twisted classes of an automorphism phi are the orbits of the action
g . x = g x phi(g)^-1; a single sweep over the group per class enumerates
them exactly.  This module is the desk-scale oracle for the group-theoretic
restriction / quotient lemmas: every inequality is checked by full
enumeration, never by theory.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import BadParameter, NotInvariant, NotNormal, ParseError

_ASSOC_SAMPLE = 2000
_FULL_ASSOC_LIMIT = 64


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple  # table[x][y] = index of x*y
    identity: int
    inverse: tuple
    labels: tuple | None = None
    generators: tuple = ()

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, g: int, x: int) -> int:
        return self.table[self.table[g][x]][self.inverse[g]]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def index_of_label(self, label) -> int:
        return self.labels.index(label)


def _identity_and_inverses(table):
    n = len(table)
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise ParseError("no identity element")
    inverse = [None] * n
    for x in range(n):
        for y in range(n):
            if table[x][y] == identity and table[y][x] == identity:
                inverse[x] = y
                break
        if inverse[x] is None:
            raise ParseError(f"element {x} has no inverse")
    return identity, tuple(inverse)


def validate_group(table, labels=None, generators=()) -> FiniteGroup:
    """Check the table really is a group: closure by typing, identity and
    inverse laws exactly, associativity fully up to order 64 and on seeded
    random triples above."""
    table = tuple(tuple(row) for row in table)
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= e < n) for e in row):
            raise ParseError("multiplication table is not an n x n index table")
    identity, inverse = _identity_and_inverses(table)
    if n <= _FULL_ASSOC_LIMIT:
        triples = product(range(n), repeat=3)
    else:
        rng = random.Random(0xA55)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(_ASSOC_SAMPLE))
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ParseError(f"associativity fails on ({a},{b},{c})")
    return FiniteGroup(n, table, identity, tuple(inverse),
                       tuple(labels) if labels is not None else None,
                       tuple(generators))


def _group_unchecked(table, labels=None) -> FiniteGroup:
    """Constructor for tables that are groups by construction (quotients and
    subgroups of validated groups); skips the associativity sweep."""
    table = tuple(tuple(row) for row in table)
    identity, inverse = _identity_and_inverses(table)
    return FiniteGroup(len(table), table, identity, inverse,
                       tuple(labels) if labels is not None else None, ())


@dataclass(frozen=True)
class FiniteAutomorphism:
    group: FiniteGroup
    perm: tuple

    def __call__(self, x: int) -> int:
        return self.perm[x]


def validate_automorphism(g: FiniteGroup, perm) -> FiniteAutomorphism:
    perm = tuple(perm)
    n = g.order
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ParseError("automorphism is not a permutation of the group")
    for x in range(n):
        for y in range(n):
            if perm[g.table[x][y]] != g.table[perm[x]][perm[y]]:
                raise ParseError(f"map is not multiplicative on ({x},{y})")
    return FiniteAutomorphism(g, perm)


def identity_automorphism(g: FiniteGroup) -> FiniteAutomorphism:
    return FiniteAutomorphism(g, tuple(range(g.order)))


def inner_automorphism_of(g: FiniteGroup, a: int) -> FiniteAutomorphism:
    return FiniteAutomorphism(g, tuple(g.conjugate(a, x) for x in range(g.order)))


def compose(f: FiniteAutomorphism, h: FiniteAutomorphism) -> FiniteAutomorphism:
    """f after h."""
    return FiniteAutomorphism(f.group, tuple(f.perm[h.perm[x]] for x in range(f.group.order)))


@dataclass(frozen=True)
class TwistedClassDecomposition:
    representatives: tuple
    class_of: tuple
    count: int
    fix_count: int


def twisted_classes(g: FiniteGroup, phi: FiniteAutomorphism) -> TwistedClassDecomposition:
    """Orbit decomposition of x ~ a x phi(a)^-1 by full enumeration.

    The class of x is the image of a -> a x phi(a)^-1 over the whole group,
    so each class costs one sweep."""
    n = g.order
    table = g.table
    inverse = g.inverse
    perm = phi.perm
    class_of = [-1] * n
    reps = []
    for x in range(n):
        if class_of[x] != -1:
            continue
        c = len(reps)
        reps.append(x)
        for a in range(n):
            y = table[table[a][x]][inverse[perm[a]]]
            class_of[y] = c
    fix = sum(1 for x in range(n) if perm[x] == x)
    return TwistedClassDecomposition(tuple(reps), tuple(class_of), len(reps), fix)


def reidemeister_number(g: FiniteGroup, phi: FiniteAutomorphism) -> int:
    return twisted_classes(g, phi).count


def check_lemma_inner(g: FiniteGroup, phi: FiniteAutomorphism) -> bool:
    """R(i_a . phi) == R(phi) for every a, by enumeration."""
    base = reidemeister_number(g, phi)
    for a in range(g.order):
        twisted = compose(inner_automorphism_of(g, a), phi)
        if reidemeister_number(g, twisted) != base:
            return False
    return True


# -- subgroups, restrictions, quotients ---------------------------------------


def subgroup_closure(g: FiniteGroup, seed) -> tuple:
    elems = {g.identity}
    frontier = list(set(seed) | {g.identity})
    elems.update(frontier)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            for z in (g.table[x][y], g.table[y][x], g.inverse[x]):
                if z not in elems:
                    elems.add(z)
                    frontier.append(z)
    return tuple(sorted(elems))


def all_subgroups(g: FiniteGroup) -> list[tuple]:
    """Every subgroup generated by at most two elements (all subgroups, for
    the builtin families at desk scale)."""
    found = {(g.identity,), tuple(range(g.order))}
    for a in range(g.order):
        found.add(subgroup_closure(g, (a,)))
        for b in range(a + 1, g.order):
            found.add(subgroup_closure(g, (a, b)))
    return sorted(found, key=lambda h: (len(h), h))


def is_normal(g: FiniteGroup, subgroup) -> bool:
    members = set(subgroup)
    return all(g.conjugate(a, h) in members for a in range(g.order) for h in members)


def is_invariant(phi: FiniteAutomorphism, subgroup) -> bool:
    members = set(subgroup)
    return all(phi.perm[h] in members for h in members)


def subgroup_group(g: FiniteGroup, subgroup):
    """(subgroup as its own FiniteGroup, global->local index map)."""
    order = sorted(subgroup)
    local = {x: i for i, x in enumerate(order)}
    table = []
    for a in order:
        row = []
        for b in order:
            p = g.table[a][b]
            if p not in local:
                raise ParseError("element set is not closed under multiplication")
            row.append(local[p])
        table.append(row)
    labels = tuple(g.labels[x] for x in order) if g.labels else None
    return _group_unchecked(table, labels=labels), local


def quotient_group(g: FiniteGroup, subgroup):
    """(quotient by a normal subgroup, global->coset index map)."""
    if not is_normal(g, subgroup):
        raise NotNormal("subgroup is not normal")
    members = sorted(subgroup)
    n = g.order
    coset_of = [-1] * n
    reps = []
    for x in range(n):
        if coset_of[x] != -1:
            continue
        c = len(reps)
        reps.append(x)
        for h in members:
            coset_of[g.table[x][h]] = c
    table = [[coset_of[g.table[reps[a]][reps[b]]] for b in range(len(reps))]
             for a in range(len(reps))]
    return _group_unchecked(table), tuple(coset_of)


def restricted_automorphism(g: FiniteGroup, phi: FiniteAutomorphism, subgroup):
    if not is_invariant(phi, subgroup):
        raise NotInvariant("subgroup is not invariant under the automorphism")
    sub, local = subgroup_group(g, subgroup)
    perm = [0] * sub.order
    for x, lx in local.items():
        perm[lx] = local[phi.perm[x]]
    return sub, validate_automorphism(sub, perm)


def induced_automorphism_finite(g: FiniteGroup, phi: FiniteAutomorphism, subgroup):
    if not is_invariant(phi, subgroup):
        raise NotInvariant("subgroup is not invariant under the automorphism")
    quot, coset_of = quotient_group(g, subgroup)
    perm = [-1] * quot.order
    for x in range(g.order):
        perm[coset_of[x]] = coset_of[phi.perm[x]]
    return quot, validate_automorphism(quot, perm)


def check_lemma_endo(g: FiniteGroup, phi: FiniteAutomorphism, subgroup) -> bool:
    """R(phi) >= R(induced automorphism on the quotient)."""
    quot, induced = induced_automorphism_finite(g, phi, subgroup)
    return reidemeister_number(g, phi) >= reidemeister_number(quot, induced)


@dataclass(frozen=True)
class LemmaInvReport:
    """Exact evaluation of the restriction/quotient implications.

    Items are None when their hypothesis does not hold (item 5 additionally
    requires a central subgroup; it is skipped with a notice otherwise).
    """

    r_total: int
    r_restricted: int
    r_quotient: int
    fix_total: int
    fix_quotient: int
    central: bool
    item2: bool | None
    item3: bool | None
    item5: bool | None
    note: str

    def all_hold(self) -> bool:
        return all(v is not False for v in (self.item2, self.item3, self.item5))


def is_central(g: FiniteGroup, subgroup) -> bool:
    return all(g.table[h][x] == g.table[x][h]
               for h in subgroup for x in range(g.order))


def check_lemma_inv(g: FiniteGroup, phi: FiniteAutomorphism, subgroup) -> LemmaInvReport:
    sub, restricted = restricted_automorphism(g, phi, subgroup)
    quot, induced = induced_automorphism_finite(g, phi, subgroup)
    total = twisted_classes(g, phi)
    rest = twisted_classes(sub, restricted)
    quo = twisted_classes(quot, induced)
    central = is_central(g, subgroup)
    item2 = (quo.fix_count <= total.fix_count) if rest.count == 1 else None
    item3 = (total.count <= rest.count) if quo.count == 1 else None
    item5 = (total.count <= rest.count * quo.count) if central else None
    note = "" if central else "subgroup not central; product bound skipped"
    return LemmaInvReport(
        r_total=total.count, r_restricted=rest.count, r_quotient=quo.count,
        fix_total=total.fix_count, fix_quotient=quo.fix_count,
        central=central, item2=item2, item3=item3, item5=item5, note=note,
    )


# -- builtin groups -------------------------------------------------------------


def _group_from_elements(elements, mul, generators=()):
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    gen_indices = tuple(index[e] for e in generators)
    return validate_group(table, labels=tuple(elements), generators=gen_indices)


def _cyclic(n: int) -> FiniteGroup:
    return _group_from_elements(list(range(n)), lambda a, b: (a + b) % n,
                                generators=[1 % n])


def _dihedral(n: int) -> FiniteGroup:
    elements = [(r, s) for s in (0, 1) for r in range(n)]

    def mul(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (r2 if s1 == 0 else -r2)) % n, s1 ^ s2)

    return _group_from_elements(elements, mul, generators=[(1 % n, 0), (0, 1)])


def _symmetric3() -> FiniteGroup:
    elements = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    return _group_from_elements(elements, mul, generators=[(1, 2, 0), (1, 0, 2)])


def _heisenberg_mod(p: int) -> FiniteGroup:
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mul(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p,
                (x[2] + y[2] + x[0] * y[1]) % p)

    return _group_from_elements(elements, mul,
                                generators=[(1, 0, 0), (0, 1, 0)])


def _upper_triangular_mod(p: int, n: int) -> FiniteGroup:
    if n not in (2, 3):
        raise BadParameter("upper_triangular_mod supports n = 2 or 3")
    units = [u for u in range(1, p)]

    def rows(mat):
        return tuple(tuple(r) for r in mat)

    elements = []
    if n == 2:
        for d1 in units:
            for d2 in units:
                for a in range(p):
                    elements.append(rows([[d1, a], [0, d2]]))
    else:
        for d1 in units:
            for d2 in units:
                for d3 in units:
                    for a in range(p):
                        for b in range(p):
                            for c in range(p):
                                elements.append(rows([[d1, a, b],
                                                      [0, d2, c],
                                                      [0, 0, d3]]))

    def mul(x, y):
        return rows([[sum(x[i][k] * y[k][j] for k in range(n)) % p
                      for j in range(n)] for i in range(n)])

    gens = [elements[1], elements[-1]]
    return _group_from_elements(elements, mul, generators=gens)


_BUILTINS = {
    "cyclic": (_cyclic, 1),
    "dihedral": (_dihedral, 1),
    "S3": (_symmetric3, 0),
    "heisenberg_mod": (_heisenberg_mod, 1),
    "upper_triangular_mod": (_upper_triangular_mod, 2),
    "Z2_semidirect_Zn": (_dihedral, 1),
}


def builtin_finite(name: str, *params: int) -> FiniteGroup:
    """Build a named finite group; accepts "cyclic(4)" or ("cyclic", 4)."""
    name = name.strip()
    if "(" in name:
        if not name.endswith(")"):
            raise BadParameter(f"malformed group name {name!r}")
        base, arg_text = name[:-1].split("(", 1)
        try:
            embedded = tuple(int(v) for v in arg_text.split(",")) if arg_text else ()
        except ValueError:
            raise BadParameter(f"malformed parameters in {name!r}") from None
        if params and tuple(params) != embedded:
            raise BadParameter(f"conflicting parameters for {name!r}")
        params = embedded
        name = base.strip()
    if name not in _BUILTINS:
        raise BadParameter(f"unknown builtin group {name!r}")
    builder, arity = _BUILTINS[name]
    if len(params) != arity:
        raise BadParameter(f"{name} takes {arity} parameter(s), got {len(params)}")
    if any(v < 1 for v in params):
        raise BadParameter("group parameters must be positive")
    return builder(*params)


def builtin_names() -> list[str]:
    return ["cyclic(n)", "dihedral(n)", "S3", "heisenberg_mod(p)",
            "upper_triangular_mod(p,n)", "Z2_semidirect_Zn(n)"]


# -- automorphism search ----------------------------------------------------------


def generating_set(g: FiniteGroup) -> list[int]:
    if g.generators and len(subgroup_closure(g, g.generators)) == g.order:
        return list(g.generators)
    gens = []
    span = {g.identity}
    for x in range(g.order):
        if x not in span:
            gens.append(x)
            span = set(subgroup_closure(g, gens))
            if len(span) == g.order:
                break
    return gens


def automorphism_from_images(g: FiniteGroup, gens, images):
    """Extend generator images to an automorphism; None if impossible."""
    n = g.order
    mapping = [-1] * n
    mapping[g.identity] = g.identity
    frontier = [g.identity]
    known = 1
    while frontier:
        x = frontier.pop()
        for gen, img in zip(gens, images):
            y = g.table[x][gen]
            fy = g.table[mapping[x]][img]
            if mapping[y] == -1:
                mapping[y] = fy
                known += 1
                frontier.append(y)
            elif mapping[y] != fy:
                return None
    if known != n or sorted(mapping) != list(range(n)):
        return None
    for x in range(n):
        for y in range(n):
            if mapping[g.table[x][y]] != g.table[mapping[x]][mapping[y]]:
                return None
    return FiniteAutomorphism(g, tuple(mapping))


def automorphism_from_label_map(g: FiniteGroup, fn) -> FiniteAutomorphism:
    """Build an automorphism from a function on element labels and validate it."""
    perm = [g.index_of_label(fn(label)) for label in g.labels]
    return validate_automorphism(g, perm)


def find_automorphisms(g: FiniteGroup) -> list[FiniteAutomorphism]:
    """All automorphisms, by exhaustive generator-image search.

    Candidate images must match the generator's order; every candidate tuple
    is extended by closure and verified multiplicative on all pairs.
    """
    gens = generating_set(g)
    orders = [g.element_order(x) for x in gens]
    candidate_lists = [
        [y for y in range(g.order) if g.element_order(y) == o] for o in orders
    ]
    results = []
    for images in product(*candidate_lists):
        phi = automorphism_from_images(g, gens, images)
        if phi is not None:
            results.append(phi)
    return results


# -- file format -----------------------------------------------------------------


def parse_group(text: str) -> FiniteGroup:
    """`order N` then N rows of N 1-based indices; '#' comments allowed."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty group file")
    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "order":
        raise ParseError("expected `order N` header", head_no)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError("bad order value", head_no) from None
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", head_no)
    table = []
    for lineno, body in lines[1:]:
        try:
            row = [int(v) - 1 for v in body.split()]
        except ValueError:
            raise ParseError("table rows must contain integers", lineno) from None
        if len(row) != n or any(not (0 <= e < n) for e in row):
            raise ParseError("table row entries must be 1..order", lineno)
        table.append(row)
    return validate_group(table)


def format_group(g: FiniteGroup) -> str:
    lines = [f"order {g.order}"]
    for row in g.table:
        lines.append(" ".join(str(e + 1) for e in row))
    return "\n".join(lines) + "\n"


def parse_automorphism(text: str, g: FiniteGroup) -> FiniteAutomorphism:
    """One line of N 1-based images; '#' comments allowed."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            values.extend(int(v) - 1 for v in body.split())
        except ValueError:
            raise ParseError("automorphism line must contain integers", lineno) from None
    if len(values) != g.order:
        raise ParseError(f"expected {g.order} images, found {len(values)}")
    return validate_automorphism(g, values)


def format_automorphism(phi: FiniteAutomorphism) -> str:
    return " ".join(str(v + 1) for v in phi.perm) + "\n"
