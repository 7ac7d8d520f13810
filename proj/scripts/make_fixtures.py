#!/usr/bin/env python3
"""Regenerates the built-in fixture documents under fixtures/.

The files are the shipped data; this script exists so their tables (notably
the eight-dimensional Hopf algebra) stay reproducible.
"""
import json
import os
from fractions import Fraction

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def rat(x):
    fr = Fraction(x)
    if fr.denominator == 1:
        return int(fr)
    return f"{fr.numerator}/{fr.denominator}"


def term(c, word):
    return {"coeff": rat(c), "word": list(word)}


def gens(*names, deg=1):
    return [{"name": n, "degree": deg} for n in names]


def write(name, doc):
    path = os.path.join(OUT, name + ".json")
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print("wrote", path)


# ---------------------------------------------------------------- ex3.4
down_up = {
    "generators": gens("x", "y"),
    "relations": [
        [term(1, "xxy"), term(-1, "yxx")],
        [term(1, "xyy"), term(-1, "yyx")],
    ],
    "assert": {
        "gldim": 3, "as_regular": True, "is_domain": True,
        "noetherian": True, "smash_product_prime": True, "cm_s": 3,
    },
}
write("ex3.4", {
    "algebra": down_up,
    "action": {"group": {"generators": [[[-1, 0], [0, 1]]]}},
    "central_subalgebra": {"generators": [
        [term(1, "xx")],
        [term(1, "yy")],
        [term(1, "xy"), term(1, "yx")],
    ]},
    "series_hints": {
        "T": [{"product": [1, 1, 2]}],
        "R": [{"poly": [1, -2, 1, 0, -1, 2, -1],
               "label": "(1-t)^2 (1-t^2) (1+t^2)"}],
    },
    "run": {"max_degree": 9, "max_homological": 4},
})

# ---------------------------------------------------------------- ex1.2.3
write("ex1.2.3", {
    "algebra": {
        "generators": gens("x", "y"),
        "relations": [[term(1, "xy"), term(1, "yx")]],
        "assert": {
            "gldim": 2, "as_regular": True, "is_domain": True,
            "noetherian": True, "smash_product_prime": True,
            "koszul": True, "cm_s": 2, "minus_one_skew": 2,
        },
    },
    "action": {"group": {"generators": [[[0, 1], [1, 0]]]}},
    "central_subalgebra": {"generators": [
        [term(1, "xx")], [term(1, "yy")],
    ]},
    "series_hints": {
        "T": [{"product": [1, 1]}],
        "R": [{"product": [1, 3]}, {"product": [1, 4]},
              {"poly": [1, -1, 0, 0, -1, 1]}],
    },
    "run": {"max_degree": 8, "max_homological": 4},
})

# ---------------------------------------------------------------- ex1.3
write("ex1.3", {
    "algebra": {
        "generators": gens("x", "y"),
        "relations": [],
        "assert": {"is_domain": True},
    },
    "action": {"group": {"generators": [[[-1, 0], [0, 1]]]}},
    "series_hints": {
        "T": [{"poly": [1, -2], "label": "1 - 2t"}],
        "R": [{"poly": [1, -2], "label": "1 - 2t"}],
    },
    "run": {"max_degree": 7, "max_homological": 2},
})

# ---------------------------------------------------------------- ex1.8
write("ex1.8", {
    "algebra": {
        "generators": gens("x"),
        "relations": [],
        "assert": {
            "gldim": 1, "as_regular": True, "is_domain": True,
            "noetherian": True, "smash_product_prime": True,
            "invariants_finite_gldim": True, "invariants_commutative": True,
            "koszul": True, "cm_s": 1,
        },
    },
    "action": {"group": {"generators": [[[-1]]]}},
    "central_subalgebra": {"generators": [[term(1, "xx")]]},
    "S": {
        "algebra": {
            "generators": [{"name": "b", "degree": 2}],
            "relations": [],
            "assert": {"gldim": 1, "as_regular": True, "is_domain": True,
                        "noetherian": True},
        },
        "images": [[term(1, "xx")]],
        "surjective": True,
        "series_hints": [{"product": [2]}],
    },
    "series_hints": {"T": [{"product": [1]}], "R": [{"product": [2]}]},
    "run": {"max_degree": 8, "max_homological": 4},
})

# ---------------------------------------------------------------- ex1.2.2
rees_weyl = {
    "generators": gens("x", "y", "z"),
    "relations": [
        [term(1, "zx"), term(-1, "xz")],
        [term(1, "zy"), term(-1, "yz")],
        [term(1, "xy"), term(-1, "yx"), term(-1, "zz")],
    ],
    "assert": {
        "gldim": 3, "as_regular": True, "is_domain": True,
        "noetherian": True, "smash_product_prime": True,
        "invariants_finite_gldim": True, "koszul": True, "cm_s": 3,
    },
}
a21 = {
    "generators": gens("X", "Y"),
    "relations": [
        [term(1, "XXY"), term(-2, "XYX"), term(1, "YXX")],
        [term(1, "XYY"), term(-2, "YXY"), term(1, "YYX")],
    ],
    "assert": {"gldim": 3, "as_regular": True, "is_domain": True,
                "noetherian": True},
}
write("ex1.2.2", {
    "algebra": rees_weyl,
    "action": {"group": {"generators": [
        [[1, 0, 0], [0, 1, 0], [0, 0, -1]]]}},
    "S": {
        "algebra": a21,
        "images": [[term(1, "x")], [term(1, "y")]],
        "surjective": True,
        "series_hints": [{"product": [1, 1, 2]}],
    },
    "series_hints": {
        "T": [{"product": [1, 1, 1]}],
        "R": [{"product": [1, 1, 2]}],
    },
    "run": {"max_degree": 8, "max_homological": 4},
})

# ---------------------------------------------------------------- ex1.2.1_m*
cyclotomic = {
    2: None,
    3: [1, 1, 1],
    4: [1, 0, 1],
    5: [1, 1, 1, 1, 1],
}
for m in (2, 3, 4, 5):
    doc = {
        "algebra": {
            "generators": gens("x", "y"),
            "relations": [[term(1, "yx"), term(-2, "xy")]],
            "assert": {
                "gldim": 2, "as_regular": True, "is_domain": True,
                "noetherian": True, "smash_product_prime": True,
                "koszul": True, "cm_s": 2,
            },
        },
        "series_hints": {
            "T": [{"product": [1, 1]}],
            "R": [{"product": [m, m]}],
        },
        "run": {"max_degree": 2 * m + 3, "max_homological": 3},
    }
    if m == 2:
        doc["action"] = {"group": {"generators": [[[-1, 0], [0, -1]]]}}
    else:
        mp = cyclotomic[m]
        doc["field"] = {"minpoly": mp, "label": f"Q(z{m})"}
        w = [0, 1] + [0] * (len(mp) - 3)
        zero = [0] * (len(mp) - 1)
        doc["action"] = {"group": {"generators": [[[w, zero], [zero, w]]]}}
    write(f"ex1.2.1_m{m}", doc)

# ---------------------------------------------------------------- ex3.6_m*
for m in (3, 4, 5):
    rels = []
    for mask in range(2 ** m):
        word = "".join("x" if (mask >> (m - 1 - i)) & 1 == 0 else "y"
                       for i in range(m))
        rels.append([term(1, word)])
    write(f"ex3.6_m{m}", {
        "algebra": {
            "generators": gens("x", "y"),
            "relations": rels,
            "assert": {"noetherian": True},
        },
        "action": {"group": {"generators": [[[-1, 0], [0, 1]]]}},
        "series_hints": {
            "T": [{"poly": [1], "label": "finite-dimensional"}],
            "R": [{"poly": [1], "label": "finite-dimensional"}],
        },
        "run": {"max_degree": m + 2, "max_homological": 2},
    })

# ---------------------------------------------------------------- ex3.7
# Kac-Palyutkin H8 on k<u,v>/(u^2 - v^2). Basis 1,x,y,xy,z,xz,yz,xyz;
# the group part is (Z/2)^2 with xor indices, z g = sigma(g) z where sigma
# swaps x and y, and z^2 = (1 + x + y - xy)/2.
def h8_tables():
    dim = 8
    labels = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]
    sigma = {0: 0, 1: 2, 2: 1, 3: 3}

    def unit(i):
        v = [0] * dim
        v[i] = 1
        return v

    def zsq_times(g):
        v = [Fraction(0)] * dim
        for h, s in ((0, 1), (1, 1), (2, 1), (3, -1)):
            v[g ^ h] += Fraction(s, 2)
        return [rat(c) for c in v]

    mult = []
    for i in range(dim):
        row = []
        for j in range(dim):
            iz, jz = i >= 4, j >= 4
            gi, gj = i % 4, j % 4
            if not iz and not jz:
                row.append(unit(gi ^ gj))
            elif not iz and jz:
                row.append(unit(4 + (gi ^ gj)))
            elif iz and not jz:
                row.append(unit(4 + (gi ^ sigma[gj])))
            else:
                row.append(zsq_times(gi ^ sigma[gj]))
        mult.append(row)
    coprod = []
    for g in range(4):
        coprod.append([{"coeff": 1, "left": g, "right": g}])
    for g in range(4):
        gz, gxz, gyz = 4 + g, 4 + (g ^ 1), 4 + (g ^ 2)
        coprod.append([
            {"coeff": "1/2", "left": gz, "right": gz},
            {"coeff": "1/2", "left": gz, "right": gxz},
            {"coeff": "1/2", "left": gyz, "right": gz},
            {"coeff": "-1/2", "left": gyz, "right": gxz},
        ])
    antipode = [unit(g) for g in range(4)]
    antipode += [unit(4 + sigma[g]) for g in range(4)]
    action = [
        [[1, 0], [0, 1]],    # 1
        [[-1, 0], [0, 1]],   # x
        [[1, 0], [0, -1]],   # y
        [[-1, 0], [0, -1]],  # xy
        [[0, 1], [1, 0]],    # z: u <-> v
        [[0, -1], [1, 0]],   # xz = x o z
        [[0, 1], [-1, 0]],   # yz
        [[0, -1], [-1, 0]],  # xyz
    ]
    return {
        "dim": dim,
        "basis": labels,
        "unit": unit(0),
        "counit": [1] * dim,
        "mult": mult,
        "coproduct": coprod,
        "antipode": antipode,
        "integral": ["1/8"] * dim,
        "action": action,
    }


write("ex3.7", {
    "algebra": {
        "generators": gens("u", "v"),
        "relations": [[term(1, "uu"), term(-1, "vv")]],
        "assert": {
            "gldim": 2, "as_regular": True, "is_domain": True,
            "noetherian": True, "smash_product_prime": True,
            "invariants_finite_gldim": True, "invariants_commutative": True,
            "koszul": True, "cm_s": 2,
        },
    },
    "action": {"hopf": h8_tables()},
    "S": {
        "algebra": {
            "generators": [{"name": "a", "degree": 2},
                           {"name": "b", "degree": 4}],
            "relations": [[term(1, "ab"), term(-1, "ba")]],
            "assert": {"gldim": 2, "as_regular": True, "is_domain": True,
                        "noetherian": True},
        },
        "images": [[term(1, "uu")],
                   [term(1, "uvuv"), term(-1, "vuvu")]],
        "surjective": True,
        "series_hints": [{"product": [2, 4]}],
    },
    "series_hints": {
        "T": [{"product": [1, 1]}],
        "R": [{"product": [2, 4]}, {"product": [2, 2]}],
    },
    "run": {"max_degree": 9, "max_homological": 3},
})

print("done")
