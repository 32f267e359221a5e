"""Regenerate the bundled fixture files in fixtures/."""

from __future__ import annotations

from pathlib import Path

from repkit import documents as docs
from repkit.exactfield import GF, QQ, cyclotomic
from repkit.group import cyclic, symmetric
from repkit.groupalgebra import GroupFunction
from repkit.linalg import Matrix, Subspace
from repkit.rep import (
    Representation,
    left_regular,
    natural_action,
    permutation_rep,
    restrict_to_subspace,
    sign_rep,
    trivial_rep,
)

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def write(name: str, doc) -> None:
    (OUT / name).write_text(docs.dumps(doc), encoding="utf-8")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    groups = {"trivial": cyclic(1), "z2": cyclic(2), "z3": cyclic(3), "z4": cyclic(4), "z6": cyclic(6), "s3": symmetric(3)}
    for stem, G in groups.items():
        write(f"{stem}.grp", docs.group_to_doc(G))

    S3, Z2, Z3 = groups["s3"], groups["z2"], groups["z3"]
    perm = permutation_rep(natural_action(S3), QQ)
    std = restrict_to_subspace(perm, Subspace.of(QQ, [[-1, 1, 0], [-1, 0, 1]]))
    zeta3 = cyclotomic(3)
    omega = Representation(Z3, zeta3, [Matrix.scalar(zeta3, 1, zeta3.root_of_unity(k)) for k in range(3)])
    reps = {
        "reg-s3.rep": (left_regular(S3, QQ), "s3.grp"),
        "perm-s3.rep": (perm, "s3.grp"),
        "std-s3.rep": (std, "s3.grp"),
        "sign-s3.rep": (sign_rep(S3, QQ), "s3.grp"),
        "triv-s3.rep": (trivial_rep(S3, QQ), "s3.grp"),
        "reg-z2.rep": (left_regular(Z2, QQ), "z2.grp"),
        "triv-z2.rep": (trivial_rep(Z2, QQ), "z2.grp"),
        "sign-z2.rep": (Representation(Z2, QQ, [Matrix(QQ, [[1]]), Matrix(QQ, [[-1]])]), "z2.grp"),
        "reg-z2-gf2.rep": (left_regular(Z2, GF(2)), None),
        "reg-z3-zeta3.rep": (left_regular(Z3, zeta3), "z3.grp"),
        "omega-z3.rep": (omega, "z3.grp"),
        "reg-z4-zeta4.rep": (left_regular(groups["z4"], cyclotomic(4)), "z4.grp"),
        "reg-z6-zeta6.rep": (left_regular(groups["z6"], cyclotomic(6)), "z6.grp"),
        "triv-trivial.rep": (trivial_rep(groups["trivial"], QQ), "trivial.grp"),
    }
    for name, (rho, ref) in reps.items():
        write(name, docs.rep_to_doc(rho, ref))

    transposition = GroupFunction.delta(S3, QQ, S3.index("(1 2)"))
    class_sum = GroupFunction(S3, QQ, {"(1 2)": 1, "(1 3)": 1, "(2 3)": 1})
    z2_sum = GroupFunction(Z2, QQ, [1, 1])
    write("delta-12-s3.fun", docs.function_to_doc(transposition, "s3.grp"))
    write("transpositions-s3.fun", docs.function_to_doc(class_sum, "s3.grp"))
    write("sum-z2.fun", docs.function_to_doc(z2_sum, "z2.grp"))


if __name__ == "__main__":
    main()
