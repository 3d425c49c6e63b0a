#!/usr/bin/env python3
"""Writes the relation catalog, expanding the indexed E/D/a families."""

import itertools
import sys

lines = []


def rel(rid, kind, anchor, lhs, rhs):
    lines.append(f"{rid} {kind} {anchor} {lhs} {rhs}")


def comm(x, y):
    return f"(comm {x} {y})"


def acomm(x, y):
    return f"(acomm {x} {y})"


def lin(terms):
    """Sum of (coefficient, name) pairs; 0 when empty."""
    terms = [(c, n) for c, n in terms if c != 0]
    if not terms:
        return "0"
    parts = [n if c == 1 else f"(* {c} {n})" for c, n in terms]
    return parts[0] if len(parts) == 1 else "(+ " + " ".join(parts) + ")"


def d(i, j):
    return 1 if i == j else 0


def D(sign, i, j):
    i, j = min(i, j), max(i, j)
    return f"D{sign}{i}{j}"


def E(i, j):
    return f"E{i}{j}"


def comm_rel(rid, anchor, x, y, rhs):
    rel(rid, "commutator", anchor, comm(x, y), rhs)


# Shape invariance and the extra ladder pair.
comm_rel("shape.H_A+", "shape-invariance", "H", "A+", "(* 4 a A+)")
comm_rel("shape.H_A-", "shape-invariance", "H", "A-", "(* -4 a A-)")
comm_rel("shape.A-_A+", "shape-invariance", "A-", "A+", "0")
comm_rel("ladder.H_B+", "ladder-B", "H", "B+", "(+ (* 4 a B+) (* 8 b A+))")
comm_rel("ladder.H_B-", "ladder-B", "H", "B-", "(- (* -4 a B-) (* 8 b A-))")
comm_rel("ladder.B-_B+", "ladder-B", "B-", "B+", "(* -4 b)")
comm_rel("ladder.A+_B+", "ladder-B", "A+", "B+", "0")
comm_rel("ladder.A-_B-", "ladder-B", "A-", "B-", "0")
comm_rel("ladder.A+_B-", "ladder-B", "A+", "B-", "(* 2 a)")
comm_rel("ladder.A-_B+", "ladder-B", "A-", "B+", "(* -2 a)")

# Jordan-block operators.
rel("block.R_explicit", "identity", "jordan-block-operators", "R", "(- (* dz dz) (* a a zb zb))")
rel("block.S_explicit", "identity", "jordan-block-operators", "S",
    "(+ (* dzb dzb) (- (* (+ (* a z) (* 2 b zb)) (+ (* a z) (* 2 b zb)))) (* 2 b))")
rel("block.T_explicit", "identity", "jordan-block-operators", "T",
    "(- (* 2 (+ (* a z) (* 2 b zb)) dz) (* 2 a zb dzb))")
rel("block.U_explicit", "identity", "jordan-block-operators", "U",
    "(+ (* 2 dz dzb) (* -2 a a z zb) (* -4 a b zb zb) (* 2 a))")
rel("block.U_from_H", "identity", "jordan-block-operators", "U", "(+ (* -1/2 H) (* 2 a))")
comm_rel("block.H_R", "jordan-block-operators", "H", "R", "0")
comm_rel("block.H_S", "jordan-block-operators", "H", "S", "(* 8 b T)")
comm_rel("block.H_T", "jordan-block-operators", "H", "T", "(* -16 b R)")
comm_rel("block.H_U", "jordan-block-operators", "H", "U", "0")
comm_rel("block.R_S", "jordan-block-operators", "R", "S", "(* -2 a T)")
comm_rel("block.R_T", "jordan-block-operators", "R", "T", "(* 4 a R)")
comm_rel("block.R_U", "jordan-block-operators", "R", "U", "0")
comm_rel("block.S_T", "jordan-block-operators", "S", "T", "(+ (* -4 a S) (* 4 b U))")
comm_rel("block.S_U", "jordan-block-operators", "S", "U", "(* 4 b T)")
comm_rel("block.T_U", "jordan-block-operators", "T", "U", "(* -8 b R)")

# gl(2).
rel("gl2.J0_from_E", "identity", "gl2", "J0", "(* 1/2 (- E11 E22))")
rel("gl2.K_from_E", "identity", "gl2", "K", "(+ E11 E22)")
rel("gl2.K_from_H", "identity", "gl2", "K", "(* (/ 1 (* 4 a)) (+ H (* (/ (* 4 b) a) R)))")
rel("gl2.K_from_RU", "identity", "gl2", "K",
    "(* (/ 1 (* 2 a)) (+ (* (/ (* 2 b) a) R) (- U) (* 2 a)))")
rel("gl2.H_from_K_J-", "identity", "gl2", "H", "(+ (* 4 a K) J-)")
comm_rel("gl2.K_J0", "gl2", "K", "J0", "0")
comm_rel("gl2.K_J+", "gl2", "K", "J+", "0")
comm_rel("gl2.K_J-", "gl2", "K", "J-", "0")
comm_rel("gl2.J0_J+", "gl2", "J0", "J+", "J+")
comm_rel("gl2.J0_J-", "gl2", "J0", "J-", "(- J-)")
comm_rel("gl2.J+_J-", "gl2", "J+", "J-", "(* 2 J0)")
for i, j, k, l in itertools.product((1, 2), repeat=4):
    comm_rel(f"gl2.E{i}{j}_E{k}{l}", "gl2", E(i, j), E(k, l),
             lin([(d(j, k), E(i, l)), (-d(i, l), E(k, j))]))

# Bosonic pairs.
for i, j in itertools.product((1, 2), repeat=2):
    comm_rel(f"boson.a{i}-_a{j}+", "boson", f"a{i}-", f"a{j}+", str(d(i, j)))
for s in "+-":
    comm_rel(f"boson.a1{s}_a2{s}", "boson", f"a1{s}", f"a2{s}", "0")

# Anticommutators.
rel("osp.acomm_a1-_a1+", "anticommutator", "osp14", acomm("a1-", "a1+"), "(+ K (* 2 J0))")
rel("osp.acomm_a1-_a2+", "anticommutator", "osp14", acomm("a1-", "a2+"), "(* 2 J-)")
rel("osp.acomm_a2-_a1+", "anticommutator", "osp14", acomm("a2-", "a1+"), "(* 2 J+)")
rel("osp.acomm_a2-_a2+", "anticommutator", "osp14", acomm("a2-", "a2+"), "(- K (* 2 J0))")
rel("osp.acomm_a1-_a1+_RTU", "anticommutator", "osp14", acomm("a1-", "a1+"),
    "(* (/ 1 (* 2 a)) (+ (* (/ (* 2 b) a) R) T (- U) (* 2 a)))")
rel("osp.acomm_a1-_a2+_R", "anticommutator", "osp14", acomm("a1-", "a2+"), "(* (/ (* -8 b) a) R)")
rel("osp.acomm_a2-_a1+_RSU", "anticommutator", "osp14", acomm("a2-", "a1+"),
    "(* (/ -1 (* 8 a b)) (+ (* (/ (* b b) (* a a)) R) S (- (* (/ b a) U))))")
rel("osp.acomm_a2-_a2+_RTU", "anticommutator", "osp14", acomm("a2-", "a2+"),
    "(* (/ 1 (* 2 a)) (+ (* (/ (* 2 b) a) R) (- T) (- U) (* 2 a)))")
for i, j in itertools.product((1, 2), repeat=2):
    rel(f"osp.E{i}{j}_acomm", "anticommutator", "osp14", acomm(f"a{i}+", f"a{j}-"), f"(* 2 {E(i, j)})")
    rel(f"osp.E{i}{j}_product", "identity", "osp14", E(i, j),
        f"(+ (* a{i}+ a{j}-) {'1/2' if i == j else '0'})")
for s in "+-":
    for i, j in ((1, 1), (1, 2), (2, 2)):
        rel(f"osp.D{s}{i}{j}_acomm", "anticommutator", "osp14", acomm(f"a{i}{s}", f"a{j}{s}"),
            f"(* 2 {D(s, i, j)})")
        rel(f"osp.D{s}{i}{j}_product", "identity", "osp14", D(s, i, j), f"(* a{i}{s} a{j}{s})")

rel("osp.D+11_AB", "identity", "osp14", "D+11",
    "(* (/ 1 (* 16 a a a b)) (+ (* b b A+ A+) (* -2 a b A+ B+) (* a a B+ B+)))")
rel("osp.D+12_AB", "identity", "osp14", "D+12", "(* (/ -1 (* 2 a a)) (- (* b A+ A+) (* a A+ B+)))")
rel("osp.D+22_AB", "identity", "osp14", "D+22", "(* (/ (* 4 b) a) A+ A+)")
rel("osp.D-11_AB", "identity", "osp14", "D-11", "(* (/ (* 4 b) a) A- A-)")
rel("osp.D-12_AB", "identity", "osp14", "D-12", "(* (/ -1 (* 2 a a)) (- (* b A- A-) (* a A- B-)))")
rel("osp.D-22_AB", "identity", "osp14", "D-22",
    "(* (/ 1 (* 16 a a a b)) (+ (* b b A- A-) (* -2 a b A- B-) (* a a B- B-)))")

pairs = ((1, 1), (1, 2), (2, 2))
for (i, j), (k, l) in itertools.product(itertools.product((1, 2), repeat=2), pairs):
    comm_rel(f"sp4.E{i}{j}_D+{k}{l}", "sp4", E(i, j), D("+", k, l),
             lin([(d(j, k), D("+", i, l)), (d(j, l), D("+", i, k))]))
    comm_rel(f"sp4.E{i}{j}_D-{k}{l}", "sp4", E(i, j), D("-", k, l),
             lin([(-d(i, k), D("-", j, l)), (-d(i, l), D("-", j, k))]))
for (i, j), (k, l) in itertools.product(pairs, pairs):
    comm_rel(f"sp4.D-{i}{j}_D+{k}{l}", "sp4", D("-", i, j), D("+", k, l),
             lin([(d(i, k), E(l, j)), (d(i, l), E(k, j)), (d(j, k), E(l, i)), (d(j, l), E(k, i))]))
for s in "+-":
    for (i, j), (k, l) in itertools.combinations(pairs, 2):
        comm_rel(f"sp4.D{s}{i}{j}_D{s}{k}{l}", "sp4", D(s, i, j), D(s, k, l), "0")
for i, (j, k) in itertools.product((1, 2), itertools.product((1, 2), repeat=2)):
    comm_rel(f"osp.a{i}-_E{j}{k}", "osp14", f"a{i}-", E(j, k), lin([(d(i, j), f"a{k}-")]))
    comm_rel(f"osp.a{i}+_E{j}{k}", "osp14", f"a{i}+", E(j, k), lin([(-d(i, k), f"a{j}+")]))
for i, (j, k) in itertools.product((1, 2), pairs):
    for s, other, sign in (("+", "-", -1), ("-", "+", 1)):
        comm_rel(f"osp.a{i}{s}_D{other}{j}{k}", "osp14", f"a{i}{s}", D(other, j, k),
                 lin([(sign * d(i, j), f"a{k}{other}"), (sign * d(i, k), f"a{j}{other}")]))
        comm_rel(f"osp.a{i}{s}_D{s}{j}{k}", "osp14", f"a{i}{s}", D(s, j, k), "0")

out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
print("cxosc-relations 1", file=out)
print("# <id> <kind> <anchor> <lhs> <rhs>; generated by tools/gen_relations.py", file=out)
for line in lines:
    print(line, file=out)
