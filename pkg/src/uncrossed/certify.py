"""Certificates: drawing collections, their verification, and file formats.

A certificate claims that a list of drawings forms an uncrossed collection
for its host: each drawing is admissible (connected, spanning, planar by
Euler count, undrawn endpoints cofacial) and every host edge is drawn in at
least one member. Verification is a pure recomputation from the rotation
systems; it never trusts any derived data stored alongside.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embedding import PlaneDrawing
from .errors import FormatError, MalformedRotationError
from .formulas import BoundReport, bound_report
from .graph import Graph, edges_connected, normalize_edge


@dataclass(frozen=True)
class UncrossedCertificate:
    """A host graph together with an ordered collection of drawings of it."""

    host: Graph
    drawings: tuple  # tuple[PlaneDrawing, ...]

    def __post_init__(self):
        object.__setattr__(self, "drawings", tuple(self.drawings))

    @property
    def size(self) -> int:
        return len(self.drawings)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of checking one drawing.

    ``structural`` lists malformation messages (wrong rotation shape, foreign
    edges); when nonempty the remaining flags are not meaningful. Otherwise
    ``violating_edges`` lists every undrawn host edge whose endpoints share no
    face.
    """

    ok: bool
    structural: tuple = ()
    connected: bool = False
    euler_ok: bool = False
    face_count: int | None = None
    violating_edges: tuple = ()

    @property
    def malformed(self) -> bool:
        return bool(self.structural)

    def lines(self) -> list:
        if self.malformed:
            return ["malformed: " + "; ".join(self.structural)]
        out = []
        out.append(f"connected and spanning: {'yes' if self.connected else 'NO'}")
        if self.connected:
            out.append(
                f"planar by face count: {'yes' if self.euler_ok else 'NO'}"
                f" ({self.face_count} faces)"
            )
            if self.euler_ok:
                if self.violating_edges:
                    pairs = ", ".join(f"({u}, {v})" for u, v in self.violating_edges)
                    out.append(f"non-cofacial undrawn edges: {pairs}")
                else:
                    out.append("all undrawn edges cofacial: yes")
        return out


def verify_drawing(host: Graph, d: PlaneDrawing) -> AdmissibilityReport:
    """Recheck admissibility of one drawing of host from scratch."""
    structural = []
    if d.host != host:
        structural.append("drawing host differs from the supplied graph")
    structural.extend(d.structural_errors())
    if structural:
        return AdmissibilityReport(ok=False, structural=tuple(structural))
    connected = edges_connected(host.n, d.drawn)
    if not connected:
        return AdmissibilityReport(ok=False, connected=False)
    try:
        faces = d.faces
    except MalformedRotationError as exc:
        return AdmissibilityReport(ok=False, structural=(str(exc),))
    face_count = len(faces) or 1
    euler_ok = host.n - len(d.drawn) + face_count == 2
    if not euler_ok:
        return AdmissibilityReport(
            ok=False, connected=True, euler_ok=False, face_count=face_count
        )
    violating = tuple(
        e for e in sorted(host.edges - d.drawn)
        if not (d.vertex_faces[e[0]] & d.vertex_faces[e[1]])
    )
    return AdmissibilityReport(
        ok=not violating,
        connected=True,
        euler_ok=True,
        face_count=face_count,
        violating_edges=violating,
    )


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of verifying a whole collection."""

    ok: bool
    drawing_reports: tuple  # tuple[AdmissibilityReport, ...]
    edge_witness: tuple  # tuple[(edge, first drawing index), ...] sorted by edge
    uncovered: tuple  # tuple[Edge, ...]

    def witness_map(self) -> dict:
        return dict(self.edge_witness)

    def lines(self) -> list:
        out = []
        for i, rep in enumerate(self.drawing_reports):
            status = "ok" if rep.ok else "FAIL"
            out.append(f"drawing {i + 1}: {status}")
            out.extend("  " + ln for ln in rep.lines())
        if self.uncovered:
            pairs = ", ".join(f"({u}, {v})" for u, v in self.uncovered)
            out.append(f"uncovered edges: {pairs}")
        else:
            out.append("coverage: every edge drawn somewhere")
        out.append(f"verdict: {'VALID' if self.ok else 'INVALID'}")
        return out


def verify_certificate(c: UncrossedCertificate) -> CertificateReport:
    """Verify every drawing and the coverage claim of a certificate."""
    reports = tuple(verify_drawing(c.host, d) for d in c.drawings)
    witness: dict = {}
    for i, d in enumerate(c.drawings):
        for e in d.drawn:
            if e in c.host.edges:
                witness.setdefault(e, i)
    uncovered = tuple(sorted(c.host.edges - set(witness)))
    ok = all(r.ok for r in reports) and not uncovered and c.size >= 1
    return CertificateReport(
        ok=ok,
        drawing_reports=reports,
        edge_witness=tuple(sorted(witness.items())),
        uncovered=uncovered,
    )


def certificate_size_vs_bounds(c: UncrossedCertificate) -> BoundReport:
    """Compare the collection size against the best known lower bound."""
    base = bound_report(c.host)
    exact = base.exact
    upper = c.size
    if exact is not None and upper < exact:
        # the certificate cannot beat a proven exact value; keep both visible
        exact = None
    provenance = tuple(base.provenance) + ("certificate-upper-bound",)
    return BoundReport(base.graph_label, base.lower, upper, exact, provenance)


# --- text format -----------------------------------------------------------
#
# graph
# <n> <m>
# <u> <v>            (m lines)
# colors <b> <w>     (optional)
# drawing 1
# edges <k>
# <u> <v>            (k lines)
# rotation
# <v>: <a> <b> ...   (n lines, vertex order 0..n-1; empty list allowed)
# outer: <u>-><v>    (optional)
# drawing 2
# ...


def serialize_certificate(c: UncrossedCertificate) -> str:
    g = c.host
    out = ["graph", f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges)
    if g.black_count is not None:
        out.append(f"colors {g.black_count} {g.n - g.black_count}")
    for i, d in enumerate(c.drawings):
        out.append(f"drawing {i + 1}")
        drawn = sorted(d.drawn)
        out.append(f"edges {len(drawn)}")
        out.extend(f"{u} {v}" for u, v in drawn)
        out.append("rotation")
        for v in range(g.n):
            row = " ".join(str(u) for u in d.rotation[v])
            out.append(f"{v}:" + (" " + row if row else ""))
        if d.outer_dart is not None:
            out.append(f"outer: {d.outer_dart[0]}->{d.outer_dart[1]}")
    return "\n".join(out) + "\n"


def serialize_drawing(d: PlaneDrawing) -> str:
    return serialize_certificate(UncrossedCertificate(d.host, (d,)))


class _Cursor:
    def __init__(self, text: str):
        self.lines = [
            ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")
        ]
        self.pos = 0

    def peek(self) -> str | None:
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self) -> str:
        ln = self.peek()
        if ln is None:
            raise FormatError("unexpected end of file")
        self.pos += 1
        return ln


def _ints(line: str, count: int, what: str) -> list:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {what}, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"non-integer in {what}: {line!r}") from None


def parse_certificate(text: str) -> UncrossedCertificate:
    cur = _Cursor(text)
    if cur.take() != "graph":
        raise FormatError("certificate must start with a 'graph' section")
    n, m = _ints(cur.take(), 2, "'n m' header")
    if n < 0 or m < 0:
        raise FormatError("negative counts in graph header")
    edges = set()
    for _ in range(m):
        u, v = _ints(cur.take(), 2, "edge line")
        edges.add((u, v))
    if len(edges) != m:
        raise FormatError("duplicate edges in graph section")
    black_count = None
    ln = cur.peek()
    if ln is not None and ln.startswith("colors"):
        cur.take()
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad colors line {ln!r}")
        try:
            b, w = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"non-integer colors line {ln!r}") from None
        if b + w != n:
            raise FormatError(f"colors {b}+{w} do not sum to n={n}")
        black_count = b
    try:
        host = Graph(n, frozenset(edges), black_count=black_count)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    drawings = []
    while cur.peek() is not None:
        head = cur.take()
        parts = head.split()
        if len(parts) != 2 or parts[0] != "drawing":
            raise FormatError(f"expected 'drawing <i>', got {head!r}")
        try:
            ordinal = int(parts[1])
        except ValueError:
            raise FormatError(f"bad drawing ordinal in {head!r}") from None
        if ordinal != len(drawings) + 1:
            raise FormatError(
                f"drawing sections out of order: found {ordinal}, "
                f"expected {len(drawings) + 1}"
            )
        eh = cur.take().split()
        if len(eh) != 2 or eh[0] != "edges":
            raise FormatError("expected 'edges <count>' after drawing header")
        try:
            k = int(eh[1])
        except ValueError:
            raise FormatError("bad edge count in drawing section") from None
        drawn = set()
        for _ in range(k):
            u, v = _ints(cur.take(), 2, "drawn edge line")
            drawn.add(normalize_edge(u, v))
        if cur.take() != "rotation":
            raise FormatError("expected 'rotation' block in drawing section")
        rotation = []
        for v in range(n):
            ln = cur.take()
            label, _, rest = ln.partition(":")
            try:
                if int(label) != v:
                    raise FormatError(
                        f"rotation lines out of order: found {label!r}, expected {v}"
                    )
            except ValueError:
                raise FormatError(f"bad rotation line {ln!r}") from None
            try:
                rotation.append(tuple(int(p) for p in rest.split()))
            except ValueError:
                raise FormatError(f"non-integer neighbor in {ln!r}") from None
        outer = None
        ln = cur.peek()
        if ln is not None and ln.startswith("outer:"):
            cur.take()
            spec = ln[len("outer:"):].strip()
            a, sep, b = spec.partition("->")
            if not sep:
                raise FormatError(f"bad outer line {ln!r}")
            try:
                outer = (int(a), int(b))
            except ValueError:
                raise FormatError(f"non-integer outer dart in {ln!r}") from None
        try:
            drawings.append(PlaneDrawing(host, frozenset(drawn), rotation, outer))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    if not drawings:
        raise FormatError("certificate contains no drawings")
    return UncrossedCertificate(host, tuple(drawings))
