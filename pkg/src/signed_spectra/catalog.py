"""The ordered catalog of family members and spectral-determination queries.

`build_catalog(n_max)` lists every pad-free family member of order at
most n_max in lexicographic order of (a, b, n), clusters consecutive
entries sharing (a, b), and marks an entry as determined by its spectrum
up to switching (DSS) exactly when it is the first of its cluster and no
other entry of the cluster has the same order.  Within a cluster, all
members of the same order are mutually cospectral, and smaller members
become cospectral after isolated-edge padding; that is the entire
cospectrality structure, since the triple determines the spectrum.

Queries: `cospectral_mates` returns every member (padded as needed)
realizing a given triple, and `is_dss` answers the determination question
for arbitrary members including padded ones.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, replace

from . import families
from .families import FamilySpec, display, spec_from_json_dict, spec_to_json_dict
from .graphs import is_connected
from .spectral import CharTriple

__all__ = [
    "Catalog",
    "CatalogEntry",
    "build_catalog",
    "cospectral_mates",
    "is_dss",
    "normalize_spec",
    "catalog_to_csv",
    "catalog_to_json",
    "catalog_from_json",
    "catalog_to_markdown",
    "spec_is_connected",
]


@dataclass(frozen=True)
class CatalogEntry:
    triple: CharTriple  # a >= 0 normal form
    spec: FamilySpec  # pad == 0
    cluster_id: int
    position: int
    dss: bool


@dataclass(frozen=True)
class Catalog:
    n_max: int
    entries: tuple[CatalogEntry, ...]

    def cluster_of(self, a: int, b: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.triple.a == a and e.triple.b == b]

    def entry_of(self, spec: FamilySpec) -> CatalogEntry:
        spec = normalize_spec(families.base_spec(spec))
        for e in self.entries:
            if e.spec == spec:
                return e
        raise KeyError(f"{display(spec)} is not in the order-{self.n_max} catalog")


def _sort_key(item: tuple[CharTriple, FamilySpec]):
    t, s = item
    return (t.a, t.b, t.n, families.family_index(s.family), s.params, s.negated)


def build_catalog(n_max: int) -> Catalog:
    items = [(families.predicted_triple(s), s) for s in families.instances_up_to(n_max)]
    items.sort(key=_sort_key)
    entries: list[CatalogEntry] = []
    cluster_id = -1
    cluster_start = 0
    for i, (t, s) in enumerate(items):
        if i == 0 or (t.a, t.b) != (items[i - 1][0].a, items[i - 1][0].b):
            cluster_id += 1
            cluster_start = i
        entries.append(CatalogEntry(t, s, cluster_id, i - cluster_start, False))
    # first of the cluster is DSS unless the next entry has the same order
    flagged = []
    for i, e in enumerate(entries):
        dss = e.position == 0 and not (
            i + 1 < len(entries)
            and entries[i + 1].cluster_id == e.cluster_id
            and entries[i + 1].triple.n == e.triple.n
        )
        flagged.append(replace(e, dss=dss))
    return Catalog(n_max, tuple(flagged))


def normalize_spec(spec: FamilySpec) -> FamilySpec:
    """Catalog normal form of the (pad-free) switching class of `spec`:
    triple entry a >= 0, and no negation flag on sign-symmetric members."""
    if spec.pad:
        raise ValueError("normalize_spec expects a pad-free spec")
    a = families.predicted_triple(spec).a
    if a < 0:
        return replace(spec, negated=not spec.negated)
    if a == 0 and families.is_sign_symmetric(spec):
        return replace(spec, negated=False)
    return spec


def cospectral_mates(triple: CharTriple, catalog: Catalog) -> list[FamilySpec]:
    """Every family member (padded to order triple.n) whose triple is `triple`.

    The result is a complete list of the mutually cospectral switching
    classes realizing the triple; empty when no member realizes it.
    """
    if triple.n > catalog.n_max:
        raise ValueError(
            f"triple order {triple.n} exceeds catalog bound {catalog.n_max}"
        )
    if triple.a < 0:
        return [
            replace(s, negated=not s.negated)
            for s in cospectral_mates(triple.reflected(), catalog)
        ]
    out = []
    for e in catalog.cluster_of(triple.a, triple.b):
        if e.triple.n <= triple.n:
            out.append(replace(e.spec, pad=(triple.n - e.triple.n) // 2))
    return out


def is_dss(spec: FamilySpec, catalog: Catalog) -> bool:
    """Whether every signed graph cospectral with `spec` is switching
    isomorphic to it.

    For a padded member this requires the pad-free part to be DSS and
    every other member with the same (|a|, b) to have order strictly
    above the padded order.
    """
    triple = families.predicted_triple(spec)
    if triple.n > catalog.n_max:
        raise ValueError(f"order {triple.n} exceeds catalog bound {catalog.n_max}")
    entry = catalog.entry_of(spec)
    if not entry.dss:
        return False
    if spec.pad == 0:
        return True
    return all(
        other.triple.n > triple.n
        for other in catalog.cluster_of(entry.triple.a, entry.triple.b)
        if other.spec != entry.spec
    )


def spec_is_connected(spec: FamilySpec) -> bool:
    return spec.pad == 0 and is_connected(families.construct(spec))


# -- exports ------------------------------------------------------------------


def catalog_to_csv(catalog: Catalog) -> str:
    buf = io.StringIO()
    buf.write("a,b,n,family,params,negated,cluster_id,position,dss\n")
    for e in catalog.entries:
        params = " ".join(str(p) for p in e.spec.params)
        buf.write(
            f"{e.triple.a},{e.triple.b},{e.triple.n},{e.spec.family},"
            f"{params},{str(e.spec.negated).lower()},{e.cluster_id},"
            f"{e.position},{str(e.dss).lower()}\n"
        )
    return buf.getvalue()


def catalog_to_json(catalog: Catalog) -> str:
    data = {
        "n_max": catalog.n_max,
        "entries": [
            {
                "triple": e.triple.as_list(),
                "spec": spec_to_json_dict(e.spec),
                "cluster_id": e.cluster_id,
                "position": e.position,
                "dss": e.dss,
            }
            for e in catalog.entries
        ],
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def catalog_from_json(text: str) -> Catalog:
    data = json.loads(text)
    entries = tuple(
        CatalogEntry(
            CharTriple.from_list(item["triple"]),
            spec_from_json_dict(item["spec"]),
            int(item["cluster_id"]),
            int(item["position"]),
            bool(item["dss"]),
        )
        for item in data["entries"]
    )
    return Catalog(int(data["n_max"]), entries)


def catalog_to_markdown(catalog: Catalog) -> str:
    """One table per (a, b) cluster; starred entries are DSS."""
    lines = [
        f"# Catalog of switching classes with two eigenvalues off ±1 (order ≤ {catalog.n_max})",
        "",
        f"{len(catalog.entries)} entries. Entries within a cluster and of equal",
        "order are mutually cospectral; smaller entries become cospectral after",
        "padding with isolated edges. A star marks entries determined by their",
        "spectrum up to switching.",
    ]
    current = -1
    for e in catalog.entries:
        if e.cluster_id != current:
            current = e.cluster_id
            lines += [
                "",
                f"## Cluster (a, b) = ({e.triple.a}, {e.triple.b})",
                "",
                "| n | member | DSS |",
                "|---|--------|-----|",
            ]
        star = "\\*" if e.dss else ""
        lines.append(f"| {e.triple.n} | {display(e.spec)} | {star} |")
    return "\n".join(lines) + "\n"
