"""Builders for the worked-example modules shared across test files."""
from tatecoh import algebra as al


def spec23():
    return al.AlgebraSpec(2, 3, ("X", "Y", "Z"))


def spec_p2(p):
    return al.AlgebraSpec(p, 2, ("X", "Y"))


def spec_2r(r):
    return al.AlgebraSpec(2, r, ("X", "Y", "Z", "W")[:r])


def rel(spec, gens, expr):
    """One relation tuple from a {generator-name: element} dict."""
    return tuple(expr.get(g, spec.zero()) for g in gens)


def module_7_1():
    """dim-7 module over GF(2)[X,Y,Z]: free on u,v modulo Xu, ZYu, Yu-Xv."""
    s = spec23()
    x, y, z = (s.variable(i) for i in range(3))
    gens = ("u", "v")
    pres = al.Presentation(s, gens, (
        rel(s, gens, {"u": x}),
        rel(s, gens, {"u": z * y}),
        rel(s, gens, {"u": y, "v": -x}),
    ))
    return al.quotient_by_relations(pres)


def module_7_3():
    """dim-6 module over GF(2)[X,Y,Z]: free on u,v modulo Zu, Yu-Xv, YZv."""
    s = spec23()
    x, y, z = (s.variable(i) for i in range(3))
    gens = ("u", "v")
    pres = al.Presentation(s, gens, (
        rel(s, gens, {"u": z}),
        rel(s, gens, {"u": y, "v": -x}),
        rel(s, gens, {"v": y * z}),
    ))
    return al.quotient_by_relations(pres)


def random_module(spec, rng, gens=2, nrel=3, min_dim=2):
    """Random projective-free module via random radical relations.

    Draws relations whose coefficients lie in the radical (so the
    generators are not killed outright), quotients, and strips free
    summands; redraws until the result has dimension >= min_dim.
    """
    from tatecoh.resolution import projective_free_part

    names = tuple(f"g{i}" for i in range(gens))
    while True:
        rels = []
        for _ in range(nrel):
            row = []
            for _ in range(gens):
                coeffs = rng.integers(0, spec.p, size=spec.dim)
                coeffs[0] = 0  # keep the coefficient in the radical
                row.append(al.AlgebraElement(spec, coeffs))
            rels.append(tuple(row))
        mod = al.quotient_by_relations(al.Presentation(spec, names, tuple(rels)))
        mod = projective_free_part(mod)
        if mod.dim >= min_dim:
            return mod


def module_two_var(p):
    """dim p+3 module over GF(p)[X,Y]: modulo X^2 u, Yu-Xv, XYu, Y^2 u."""
    s = spec_p2(p)
    x, y = s.variable(0), s.variable(1)
    gens = ("u", "v")
    pres = al.Presentation(s, gens, (
        rel(s, gens, {"u": x * x}),
        rel(s, gens, {"u": y, "v": -x}),
        rel(s, gens, {"u": x * y}),
        rel(s, gens, {"u": y * y}),
    ))
    return al.quotient_by_relations(pres)
