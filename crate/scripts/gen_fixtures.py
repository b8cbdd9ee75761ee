"""Regenerate the shipped fixture JSON from PARI/GP's elldata tables.

Requires cypari2 and the elldata package (set PARI_DATADIR if it is not
installed in PARI's default location).
"""
import json
import os
import sys

import cypari2

pari = cypari2.Pari()
pari.allocatemem(4 * 10**9)
if "PARI_DATADIR" in os.environ:
    pari.default("datadir", os.environ["PARI_DATADIR"])

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "fixtures")

CITED = ["50b1", "50a3", "50b2", "450b4", "1849a1", "4489a1", "121c2",
         "121b1", "121a2", "162b1", "27a4", "54b3"]
# one representative per rational j with an isogeny of these degrees
FINITE_J = {
    11: ["121a1", "121b1", "121c1"],
    14: ["49a1", "49a2"],
    15: ["50a1", "50a2", "50a3", "50a4"],
    17: ["14450p1", "14450p2"],
    19: ["361a1"],
    21: ["162b1", "162b2", "162b3", "162b4"],
    27: ["27a2", "27a4"],
    37: ["1225h1", "1225h2"],
    43: ["1849a1"],
    67: ["4489a1"],
    163: ["26569a1"],
}
EXTRA = ["11a1", "11a2", "11a3", "14a1", "15a1", "15a4", "15a8", "19a1",
         "20a1", "21a1", "24a1", "26b1", "30a1", "30a2", "37a1", "54b1",
         "66c1", "90c3", "210e2", "36a1", "64a1", "32a1", "27a1", "49a1",
         "17a1", "43a1", "389a1", "5077a1"]


def curve(label):
    r = pari(f'ellsearch("{label}")')
    return pari.ellinit(r[1]), [int(a) for a in r[1]]


def ram(g, primes):
    nf = pari.nfinit([g, primes])
    out = {}
    for p in primes:
        es = [int(pr[2]) for pr in pari.idealprimedec(nf, p)]
        if max(es) > 1:
            out[str(p)] = max(es)
    return out


def fingerprint(g, primes):
    return {"degree": int(pari.poldegree(g)), "ramification": ram(g, primes)}


def bad_primes(E):
    return [int(p) for p in pari.factor(pari.ellglobalred(E)[0])[0]]


def isogenies(E):
    L, M = pari.ellisomat(E)
    return L, M


def exact_kernel_fields(E, m):
    """Fingerprints of x-fields of points of exact order m in rational m-kernels."""
    L, M = isogenies(E)
    row = [int(M[0, k]) for k in range(len(L))]
    primes = sorted(set(bad_primes(E)) | {int(q) for q in pari.factor(m)[0]})
    kers = {}
    for k, deg in enumerate(row):
        if deg > 1:
            kers.setdefault(deg, []).append(L[k][1][2])
    fps = []
    for h in kers.get(m, []):
        h = h / pari.pollead(h)
        for dg, hs in kers.items():
            if dg < m and m % dg == 0:
                for h2 in hs:
                    g = pari.gcd(h, h2)
                    if pari.poldegree(g) > 0:
                        h = pari.divrem(h, g)[0]
        for f in pari.factor(h)[0]:
            fp = fingerprint(f, primes)
            if fp not in fps:
                fps.append(fp)
    return fps


def two_division_field(E):
    c4, c6 = E[9], E[10]
    spl = pari.polredabs(pari.nfsplitting(pari(f"x^3 - ({c4})/48*x - ({c6})/864")))
    primes = bad_primes(E)
    if 2 not in primes:
        primes = [2] + primes
    if 3 not in primes:
        primes = sorted(primes + [3])
    if pari.poldegree(spl) == 1:
        return {"degree": 1, "ramification": {}}
    return fingerprint(spl, primes)


def record(label):
    E, ai = curve(label)
    L, M = isogenies(E)
    degs = sorted({int(M[0, k]) for k in range(len(L))} - {1})
    tors = [int(t) for t in pari.elltors(E)[1]]
    if len(tors) == 0:
        shape = [1, 1]
    elif len(tors) == 1:
        shape = [1, tors[0]]
    else:
        shape = [tors[1], tors[0]]
    j = E[12]
    rec = {
        "label": label,
        "a_invariants": [str(a) for a in ai],
        "j": str(j),
        "torsion_q": shape,
        "cyclic_isogeny_degrees": degs,
        "conductor": str(int(pari.ellglobalred(E)[0])),
    }
    return rec, E


def main():
    records = {}
    for lab in CITED + EXTRA:
        records[lab] = record(lab)[0]
    for m, labs in FINITE_J.items():
        for lab in labs:
            if lab not in records:
                records[lab] = record(lab)[0]
            E, _ = curve(lab)
            print("kernel", lab, m, file=sys.stderr)
            records[lab].setdefault("kernel_fields", {})[str(m)] = exact_kernel_fields(E, m)
            if m == 15:
                records[lab]["two_division_field"] = two_division_field(E)
    # every curve with a rational cyclic 25-isogeny and conductor < 1000
    for N in range(11, 1000):
        for cl in pari.ellsearch(N):
            lab = str(cl[0])
            E = pari.ellinit(cl[1])
            L, M = isogenies(E)
            if any(int(M[0, k]) == 25 for k in range(len(L))) and lab not in records:
                records[lab] = record(lab)[0]
    recs = [records[k] for k in sorted(records, key=sort_key)]
    with open(os.path.join(OUT, "curves.json"), "w") as fh:
        json.dump({"schema_version": 1, "records": recs}, fh, indent=1, sort_keys=True)
        fh.write("\n")
    towers = []
    for d, cubic in [(-1, "x^3-3*x-4"), (-3, "x^3-3"), (-6, "x^3+3*x+2")]:
        spl = pari.polredabs(pari.nfsplitting(pari(cubic)))
        towers.append({"d": d, "p": 3, "kind": "anti", "level": 1,
                       "cubic": coeffs(pari(cubic)), "poly": coeffs(spl)})
    with open(os.path.join(OUT, "towers.json"), "w") as fh:
        json.dump({"schema_version": 1, "levels": towers}, fh, indent=1, sort_keys=True)
        fh.write("\n")


def coeffs(f):
    return [str(c) for c in reversed(list(pari.Vec(f)))]


def sort_key(lab):
    i = 0
    while lab[i].isdigit():
        i += 1
    return (int(lab[:i]), lab[i:])


if __name__ == "__main__":
    main()
