"""Smoke test for the fractau extension module.

Build and install first:  pip install ./crates/py   (or: cd crates/py && maturin develop)
"""

import fractau

ring = fractau.Ring(3, ["x", "y"])
assert ring.p == 3 and ring.vars == ["x", "y"]
assert ring.bracket_root("x^3*y^2 + x^2*y^3") == ["x", "y"]
assert ring.bracket_root("x^3*y - x^2*y^2 + x*y^3") == ["1"]
assert ring.ideal_key("x+y, x*y") == "x+y;y^2"

stairs = fractau.Family(ring, ["x+y", "x*y"])
assert len(stairs) == 2 and stairs.gen_counts == [1, 1]
assert fractau.tau(stairs, "1/3,2/3") == ["x", "y"]
assert fractau.tau(stairs, "2/3,1/3") == ["1"]
assert fractau.tau(stairs, "1,1") == ["x^2*y + x*y^2"]
assert fractau.chi(stairs, "x,y", "17/27,17/27") == 1
assert fractau.chi(stairs, "x,y", "2/3,2/3") == 0

raster = fractau.rasterize(stairs, "1,1", 2)
assert raster.dims == [10, 10] and len(raster.cells) == 100
assert sorted(raster.palette) == ["1", "x*y", "x+y", "x;y", "x^2*y+x*y^2"]

seq, lower, upper = fractau.f_threshold(stairs, [1, 1], "x,y", 3)
assert seq == ["1/3", "5/9", "17/27"] and lower == "17/27" and upper == "1"
assert fractau.v_number(stairs, [1, 1], "x,y", 2) == 5

assert fractau.staircase_boundary(1) == [("0.01", "0.22"), ("0.21", "0.12")]
assert fractau.lucas_binomial(4, 2, 3) == 0

for bad in (lambda: fractau.Ring(4, ["x"]), lambda: ring.parse("x^^2"), lambda: fractau.tau(stairs, "1/3")):
    try:
        bad()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

print("ok")
