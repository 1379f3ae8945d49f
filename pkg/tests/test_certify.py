"""Certificate verifier: admissibility reports, coverage, text round trips."""

from __future__ import annotations

import pytest

from uncrossed import (
    FormatError,
    Graph,
    PlaneDrawing,
    UncrossedCertificate,
    certificate_size_vs_bounds,
    complete_graph,
    k5_two_wheel_certificate,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
    verify_drawing,
    wheel_drawing,
)
from uncrossed.certify import serialize_drawing


def test_wheel_drawing_is_admissible():
    for n in (4, 5, 8, 13):
        d = wheel_drawing(n)
        rep = verify_drawing(d.host, d)
        assert rep.ok, rep.lines()
        assert rep.connected and rep.euler_ok
        assert rep.violating_edges == ()


def test_verify_flags_host_mismatch():
    d = wheel_drawing(5)
    other = complete_graph(6)
    rep = verify_drawing(other, d)
    assert rep.malformed


def test_verify_flags_disconnected():
    host = complete_graph(4)
    d = PlaneDrawing(host, [(0, 1), (2, 3)], ((1,), (0,), (3,), (2,)), None)
    rep = verify_drawing(host, d)
    assert not rep.ok and not rep.connected


def test_verify_flags_nonplanar_rotation():
    host = complete_graph(5)
    rot = tuple(tuple(w for w in range(5) if w != v) for v in range(5))
    d = PlaneDrawing(host, host.edges, rot, None)
    rep = verify_drawing(host, d)
    assert not rep.ok
    assert rep.connected and not rep.euler_ok


def test_verify_flags_non_cofacial_undrawn_edge():
    # a drawn 4-cycle keeps every vertex pair cofacial
    host = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    rot = ((1, 3), (0, 2), (1, 3), (2, 0))
    d = PlaneDrawing(host, [(0, 1), (1, 2), (2, 3), (0, 3)], rot, (0, 1))
    rep = verify_drawing(host, d)
    assert rep.euler_ok
    assert rep.violating_edges == ()

    # drawn octahedron: every face is a triangle, so the antipodal pair 0, 1
    # shares no face in any embedding; adding (0, 1) to the host must trip
    # the cofaciality check
    from uncrossed import is_planar_graph

    oct_edges = [
        (u, v)
        for u in range(6)
        for v in range(u + 1, 6)
        if (u, v) not in [(0, 1), (2, 3), (4, 5)]
    ]
    ok, emb = is_planar_graph(Graph(6, oct_edges))
    assert ok
    host2 = Graph(6, oct_edges + [(0, 1)])
    d2 = PlaneDrawing(host2, oct_edges, emb.rotation, None)
    rep2 = verify_drawing(host2, d2)
    assert rep2.euler_ok
    assert rep2.violating_edges == ((0, 1),)
    assert not rep2.ok
    assert "non-cofacial undrawn edges: (0, 1)" in rep2.lines()[-1]


def test_verify_certificate_valid_and_witness_map():
    cert = k5_two_wheel_certificate()
    rep = verify_certificate(cert)
    assert rep.ok
    assert rep.uncovered == ()
    wm = rep.witness_map()
    assert set(wm) == set(cert.host.sorted_edges)
    assert set(wm.values()) <= {0, 1}
    assert rep.lines()[-1] == "verdict: VALID"


def test_verify_certificate_counts_coverage():
    cert = k5_two_wheel_certificate()
    one = UncrossedCertificate(cert.host, cert.drawings[:1])
    rep = verify_certificate(one)
    assert not rep.ok
    assert len(rep.uncovered) == 10 - 8
    assert rep.drawing_reports[0].ok  # the drawing itself is fine


def test_verify_certificate_rejects_empty():
    cert = UncrossedCertificate(complete_graph(3), ())
    assert not verify_certificate(cert).ok


def test_certificate_text_roundtrip():
    cert = k5_two_wheel_certificate()
    text = serialize_certificate(cert)
    back = parse_certificate(text)
    assert back.host == cert.host
    assert back.size == cert.size
    for a, b in zip(back.drawings, cert.drawings):
        assert a.drawn == b.drawn
        assert a.rotation == b.rotation
        assert a.outer_dart == b.outer_dart
    assert verify_certificate(back).ok


def test_certificate_text_roundtrip_colored():
    from uncrossed import bipartite_uncrossed_collection

    cert = bipartite_uncrossed_collection(3, 3)
    back = parse_certificate(serialize_certificate(cert))
    assert back.host.black_count == 3
    assert verify_certificate(back).ok


def test_parse_rejects_malformed_certificates():
    cert = k5_two_wheel_certificate()
    text = serialize_certificate(cert)
    with pytest.raises(FormatError):
        parse_certificate("")
    with pytest.raises(FormatError):
        parse_certificate(text.replace("drawing 2", "drawing 7", 1))
    with pytest.raises(FormatError):
        parse_certificate(text.replace("graph", "grpah", 1))
    # truncated rotation block
    lines = text.strip().splitlines()
    with pytest.raises(FormatError):
        parse_certificate("\n".join(lines[:-2]))


def test_serialize_drawing_single():
    d = wheel_drawing(6)
    text = serialize_drawing(d)
    back = parse_certificate(text)
    assert back.size == 1
    assert back.drawings[0].drawn == d.drawn


def test_certificate_size_vs_bounds():
    cert = k5_two_wheel_certificate()
    r = certificate_size_vs_bounds(cert)
    assert r.upper == 2 and r.exact == 2
    assert r.optimal
    assert "certificate-upper-bound" in r.provenance

    # oversized collection: upper bound above the known exact value
    fat = UncrossedCertificate(cert.host, cert.drawings + cert.drawings)
    r2 = certificate_size_vs_bounds(fat)
    assert r2.upper == 4
    assert not r2.optimal
