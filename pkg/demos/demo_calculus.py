"""Parameter arithmetic: pasting, fiber sums, destabilization, pokes.

Run:  python3 demos/demo_calculus.py
"""

from trisect import (
    BoundaryCircles,
    BridgeData,
    ClosedPage,
    CurveSystem,
    PastingInput,
    StarDiagram,
    TrisectionParams,
    curve_complement,
    destabilize,
    fiber_sum,
    format_params,
    parse_params,
    paste,
    poke,
)

# Parameters are written  g;k1,k2,k3  for closed pieces and
# g;k1,k2,k3;b  for pieces with b boundary components.
disk = parse_params("0;0,0,0;1")
print("disk piece:", format_params(disk))

# Pasting two disk pieces along their single boundary circle yields the
# sphere: G = g + g' + n - 1 with n = 1 circle.
sphere = paste(PastingInput(disk, disk, BoundaryCircles(1), common=(0, 0, 0)))
print("disk + disk =", format_params(sphere))

# Closed-page pasting needs closed surfaces on both sides; over a
# genus-zero page the genus goes up by two.
trivial = parse_params("0;0,0,0")
print("closed page:", format_params(paste(PastingInput(trivial, trivial, ClosedPage(0)))))

# A bigger gluing: two pieces with two boundary circles each, identified
# along all circles; common-curve counts pin down the handle numbers.
side = parse_params("2;1,1,1;2")
other = parse_params("1;0,1,1;2")
glued = paste(PastingInput(side, other, BoundaryCircles(2), common=(1, 0, 2)))
print("circle paste:", format_params(glued))

# Fiber sum along a bridge-position surface adds genera and handle counts
# with a correction from the bridge data.
a = TrisectionParams(2, (0, 0, 0), 0, bridge=BridgeData(2, (1, 1, 1)))
b = TrisectionParams(1, (0, 0, 0), 0, bridge=BridgeData(2, (1, 1, 1)))
s = fiber_sum(a, b)
print("fiber sum:", format_params(s))

# Destabilization removes a stabilized handle from one sector at a time.
big = parse_params("51;13,13,23")
small = destabilize(big, sector=3, times=10)
print("destabilized:", format_params(small))     # 41;13,13,13

# Poking punctures the surface away from the curves; each puncture adds a
# boundary component and a null class to the requested system.
torus = StarDiagram(
    1, 0,
    CurveSystem("alpha", ((1, 0),)),
    CurveSystem("beta", ((0, 1),)),
    CurveSystem("gamma", ((1, 1),)),
)
poked = poke(torus, (2, 0, 1))
print("poked: boundary %d, gamma now %d classes"
      % (poked.boundary, len(poked.gamma.classes)))

# Removing a neighborhood of a curve decomposed into one arc per sector.
# The handle numbers of the complement are diagram data, so only the genus
# and boundary of the result are determined.
out = curve_complement(parse_params("2;0,0,0"), arcs=(1, 1, 1))
print("complement: genus %d boundary %d punctures %d closure genus %s"
      % (out.params.genus, out.params.boundary, out.punctures, out.closure_genus))
