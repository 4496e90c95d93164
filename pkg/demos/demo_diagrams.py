"""Star diagrams: the file format, validation, and first homology.

Run:  python3 demos/demo_diagrams.py
"""

import json

from trisect import (
    CurveSystem,
    StarDiagram,
    first_homology,
    parse_diagram,
    serialize_diagram,
    validate_diagram,
)

# A diagram is three curve systems on a genus-g surface, each curve recorded
# by its homology class in the basis e1 f1 ... eg fg.  This one is the
# standard genus-one picture of the complex projective plane.
cp2_text = json.dumps({
    "basis": "e1 f1",
    "genus": 1,
    "boundary": 0,
    "alpha": [[1, 0]],
    "beta": [[0, 1]],
    "gamma": [[1, 1]],
})

d = parse_diagram(cp2_text)
print("parsed CP2 diagram: genus", d.genus, "boundary", d.boundary)

violations = validate_diagram(d)
print("violations:", violations or "none")

rep = first_homology(d)
print("H1 =", rep.h1_str())        # simply connected: 0

# The same surface carries S1 x S3 when all three systems share one curve.
s1s3 = StarDiagram(
    1, 0,
    CurveSystem("alpha", ((0, 1),)),
    CurveSystem("beta", ((0, 1),)),
    CurveSystem("gamma", ((0, 1),)),
)
print("H1(S1xS3) =", first_homology(s1s3).h1_str())   # Z

# A lens-space style example with torsion: alpha wraps twice.
torsion = StarDiagram(
    1, 0,
    CurveSystem("alpha", ((2, 0),)),
    CurveSystem("beta", ((0, 1),)),
    CurveSystem("gamma", ((0, 1),)),
)
print("H1(twisted) =", first_homology(torsion).h1_str())   # Z/2

# Serialization is canonical: parse(serialize(d)) == d, byte for byte.
canon = serialize_diagram(d)
assert serialize_diagram(parse_diagram(canon)) == canon
print("canonical form round-trips, %d bytes" % len(canon))
