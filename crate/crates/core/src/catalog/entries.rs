//! Case data. Field parameters are scalar names; `{...}` are integer placeholders.

use super::CaseId::*;
use super::DimClass::*;
use super::GenDecl::{Free, GroupLike};
use super::Origin::{Forced, Stated};
use super::ParamDomain::{Binary, Field, Range};
use super::{CaseEntry, Constraint, GenDecl, ParamDecl, Tail};

const fn bin(name: &'static str) -> ParamDecl {
    ParamDecl { name, domain: Binary }
}

const fn fld(name: &'static str) -> ParamDecl {
    ParamDecl { name, domain: Field }
}

const fn range(name: &'static str, lo: &'static str, hi: &'static str) -> ParamDecl {
    ParamDecl { name, domain: Range { lo, hi } }
}

const fn stated(expr: &'static str, source: &'static str) -> Constraint {
    Constraint { expr, origin: Stated, source }
}

const fn forced(expr: &'static str, source: &'static str) -> Constraint {
    Constraint { expr, origin: Forced, source }
}

/// `[g^N, x] = N lambda g^a (1 - g^k)` must vanish when `p` does not divide `N`.
const CONJ: &str = "conjugation by g^N, p coprime to N";
const GX_P: &str = "overlap g*x^p";
const GY_P: &str = "overlap g*y^p";
const GXY: &str = "overlap g*x*y";
const XP_Y: &str = "overlap x^p*y";
const X_YP: &str = "overlap x*y^p";
const YP_Y: &str = "overlap y^p*y";
const HX_P: &str = "overlap h*x^p";
const SKEW: &str = "skew-primitivity of the deformed relation";

const BASE: CaseEntry = CaseEntry {
    id: A1,
    class: P2Q,
    group: "",
    admissible: &[],
    twist: None,
    roots: &[],
    gens: &[],
    affine: &[],
    params: &[],
    relations: &[],
    coproduct: &[],
    tails: &[],
    constraints: &[],
    deviations: &[],
    caveat: None,
};

const XI_Q: &[(&str, &str)] = &[("xi", "q")];
const XI_R: &[(&str, &str)] = &[("xi", "r")];
const ZETA: &[(&str, &str)] = &[("zeta", "q*q")];
const THETA: &[(&str, &str)] = &[("theta", "q*r")];

const CPQ: &str = "C_pq";
const CQ: &str = "C_q";
const CQ2: &str = "C_{q^2}";
const CQQ: &str = "C_q x C_q";
const CQR: &str = "C_qr";

const G_PQ_X: &[GenDecl] = &[GroupLike("g", "p*q"), Free("x", "1")];
const G_Q_X: &[GenDecl] = &[GroupLike("g", "q"), Free("x", "1")];
const G_Q_XY: &[GenDecl] = &[GroupLike("g", "q"), Free("x", "1"), Free("y", "1")];
const G_Q_XYP: &[GenDecl] = &[GroupLike("g", "q"), Free("x", "1"), Free("y", "p")];
const G_Q2_X: &[GenDecl] = &[GroupLike("g", "q*q"), Free("x", "1")];
const G_QQ_X: &[GenDecl] = &[GroupLike("g", "q"), GroupLike("h", "q"), Free("x", "1")];
const G_QR_X: &[GenDecl] = &[GroupLike("g", "q*r"), Free("x", "1")];

const PRIM_X: &[(&str, &str)] = &[("x", "x (#) 1 + 1 (#) x")];
const SKEW_G: &[(&str, &str)] = &[("x", "x (#) 1 + g (#) x")];
const SKEW_GP: &[(&str, &str)] = &[("x", "x (#) 1 + g^{p} (#) x")];
const SKEW_GQ: &[(&str, &str)] = &[("x", "x (#) 1 + g^{q} (#) x")];
const SKEW_GR: &[(&str, &str)] = &[("x", "x (#) 1 + g^{r} (#) x")];
const PRIM_XY: &[(&str, &str)] = &[("x", "x (#) 1 + 1 (#) x"), ("y", "y (#) 1 + 1 (#) y")];
const C4_COP: &[(&str, &str)] = &[("x", "x (#) 1 + g (#) x"), ("y", "y (#) 1 + g^{mu} (#) y")];
const C5_COP: &[(&str, &str)] = &[("x", "x (#) 1 + 1 (#) x"), ("y", "y (#) 1 + g^{nu} (#) y")];
const D12_COP: &[(&str, &str)] = &[("x", "x (#) 1 + 1 (#) x"), ("y", "y (#) 1 + 1 (#) y")];
const D3_COP: &[(&str, &str)] = &[("x", "x (#) 1 + g (#) x"), ("y", "y (#) 1 + g^{p} (#) y")];
const OMEGA0: &[(&str, Tail)] = &[("y", Tail::Omega0 { x: "x" })];
const OMEGA1: &[(&str, Tail)] = &[("y", Tail::OmegaTheta { x: "x", g: "g", theta: 1 })];

const Q_DIV: &[&str] = &["q | p-1"];
const Q_NDIV: &[&str] = &["!(q | p-1)"];

const C_PARAMS: &[ParamDecl] =
    &[fld("alpha1"), fld("alpha2"), fld("beta1"), fld("beta2"), fld("gamma1"), fld("gamma2")];
const C_MU: &[ParamDecl] = &[
    range("mu", "2", "q-1"),
    fld("alpha1"),
    fld("alpha2"),
    fld("beta1"),
    fld("beta2"),
    fld("gamma1"),
    fld("gamma2"),
];
const C3_CONSTRAINTS: &[Constraint] = &[
    stated("alpha1*(xi - xi^{p})", GX_P),
    stated("alpha2*(xi^{mu} - xi^{p})", GX_P),
    stated("beta1*(xi - xi^{p*mu})", GY_P),
    stated("beta2*(xi^{mu} - xi^{p*mu})", GY_P),
    stated("gamma1*(xi - xi^{mu+1})", GXY),
    stated("gamma2*(xi^{mu} - xi^{mu+1})", GXY),
    stated("alpha1*gamma1", XP_Y),
    stated("beta2*gamma1 - gamma1^{p}", X_YP),
];
const C3_RELS: &[&str] = &[
    "g*x = xi*x*g",
    "g*y = xi^{mu}*y*g",
    "x^{p} = alpha1*x + alpha2*y",
    "y^{p} = beta1*x + beta2*y",
    "x*y = y*x + gamma1*x + gamma2*y",
];

const C1: CaseEntry = CaseEntry { class: P2Q, group: CQ, gens: G_Q_XY, coproduct: PRIM_XY, ..BASE };
const C4: CaseEntry = CaseEntry { class: P2Q, group: CQ, gens: G_Q_XY, coproduct: C4_COP, ..BASE };
const C5: CaseEntry = CaseEntry { class: P2Q, group: CQ, gens: G_Q_XY, coproduct: C5_COP, ..BASE };
const D: CaseEntry = CaseEntry { class: P2Q, group: CQ, gens: G_Q_XYP, roots: XI_Q, ..BASE };
const D3B_CAVEAT: Option<&str> = Some(
    "assumes lambda1 = lambda2 = 0 in the skew-primitive deformations; the non-graded deformations of y^p are not classified",
);
const AB2: CaseEntry = CaseEntry { class: PQ2, group: CQQ, gens: G_QQ_X, roots: XI_Q, ..BASE };
const BA: CaseEntry = CaseEntry { class: PQR, group: CQR, gens: G_QR_X, roots: THETA, ..BASE };
const CA: CaseEntry = CaseEntry { class: PQ, group: CQ, gens: G_Q_X, roots: XI_Q, ..BASE };

pub static CATALOG: &[CaseEntry] = &[
    // ---- p^2 q, group C_pq.
    CaseEntry {
        id: A1,
        group: CPQ,
        gens: G_PQ_X,
        params: &[bin("lambda")],
        relations: &["g*x = x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        ..BASE
    },
    CaseEntry {
        id: A2,
        group: CPQ,
        roots: XI_Q,
        gens: G_PQ_X,
        params: &[bin("lambda")],
        relations: &["g*x = xi*x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(xi - xi^{p})", GX_P)],
        ..BASE
    },
    CaseEntry {
        id: A3,
        group: CPQ,
        gens: G_PQ_X,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda1*x + lambda2*(1 - g^{p})"],
        coproduct: SKEW_G,
        ..BASE
    },
    CaseEntry {
        id: A4a,
        group: CPQ,
        admissible: Q_DIV,
        gens: G_PQ_X,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^{p+1})", "x^{p} = lambda2*x + lambda3*(1 - g^{p})"],
        coproduct: SKEW_GP,
        constraints: &[stated("(lambda2 - lambda1^{p-1})*lambda1", "overlap g*x^p")],
        ..BASE
    },
    CaseEntry {
        id: A4b,
        group: CPQ,
        admissible: Q_NDIV,
        gens: G_PQ_X,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^{p+1})", "x^{p} = lambda2*(1 - g^{p*p})"],
        coproduct: SKEW_GP,
        constraints: &[stated("lambda1", GX_P)],
        ..BASE
    },
    CaseEntry {
        id: A5,
        group: CPQ,
        gens: G_PQ_X,
        params: &[bin("lambda1")],
        relations: &["g*x = x*g + lambda1*(g - g^{q+1})", "x^{p} = ({q}*lambda1)^{p-1}*x"],
        coproduct: SKEW_GQ,
        ..BASE
    },
    CaseEntry {
        id: A6,
        group: CPQ,
        roots: XI_Q,
        gens: G_PQ_X,
        params: &[bin("lambda1")],
        relations: &["g*x = xi*x*g + lambda1*(g - g^{q+1})", "x^{p} = 0"],
        coproduct: SKEW_GQ,
        ..BASE
    },
    // ---- p^2 q, group Z_p x| Z_q and Z_q x| Z_p.
    CaseEntry {
        id: B1a,
        group: "Z_p x| Z_q",
        admissible: Q_DIV,
        twist: Some(("q", "p")),
        gens: &[GroupLike("g", "q"), GroupLike("h", "p"), Free("x", "1")],
        affine: &[("g", "p", "0")],
        params: &[bin("lambda")],
        relations: &["g*h = h^{t}*g", "g*x = x*g", "h*x = x*h", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        deviations: &["group relations read g^q = h^p = 1 where the list of possible relations repeats g^p = 1, h^q = 1"],
        ..BASE
    },
    CaseEntry {
        id: B1b,
        group: "Z_p x| Z_q",
        admissible: Q_DIV,
        twist: Some(("q", "p")),
        roots: XI_Q,
        gens: &[GroupLike("g", "q"), GroupLike("h", "p"), Free("x", "1")],
        affine: &[("g", "p", "0")],
        params: &[bin("lambda")],
        relations: &["g*h = h^{t}*g", "g*x = xi*x*g", "h*x = x*h", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(xi - xi^{p})", GX_P)],
        deviations: &["group relations read g^q = h^p = 1 where the list of possible relations repeats g^p = 1, h^q = 1"],
        ..BASE
    },
    CaseEntry {
        id: B2a,
        group: "Z_q x| Z_p",
        admissible: &["p | q-1"],
        twist: Some(("p", "q")),
        gens: &[GroupLike("g", "p"), GroupLike("h", "q"), Free("x", "1")],
        affine: &[("g", "q", "0")],
        params: &[bin("lambda")],
        relations: &["g*h = h^{t}*g", "g*x = x*g", "h*x = x*h", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        ..BASE
    },
    // ---- p^2 q, group C_q, V of dimension two.
    CaseEntry { id: C1a, relations: &["g*x = x*g", "g*y = y*g", "x^{p} = 0", "y^{p} = 0", "x*y = y*x"], ..C1 },
    CaseEntry { id: C1b, relations: &["g*x = x*g", "g*y = y*g", "x^{p} = x", "y^{p} = 0", "x*y = y*x"], ..C1 },
    CaseEntry { id: C1c, relations: &["g*x = x*g", "g*y = y*g", "x^{p} = y", "y^{p} = 0", "x*y = y*x"], ..C1 },
    CaseEntry { id: C1d, relations: &["g*x = x*g", "g*y = y*g", "x^{p} = x", "y^{p} = y", "x*y = y*x"], ..C1 },
    CaseEntry {
        id: C1e,
        relations: &["g*x = x*g", "g*y = y*g", "x^{p} = x", "y^{p} = 0", "x*y = y*x + y"],
        ..C1
    },
    CaseEntry {
        id: C2a,
        admissible: Q_NDIV,
        roots: XI_Q,
        params: &[
            range("mu", "1", "q-1"),
            fld("alpha1"),
            fld("alpha2"),
            fld("beta1"),
            fld("beta2"),
            fld("gamma1"),
            fld("gamma2"),
        ],
        relations: &[
            "g*x = x*g",
            "g*y = xi^{mu}*y*g",
            "x^{p} = alpha1*x + alpha2*y",
            "y^{p} = beta1*x + beta2*y",
            "x*y = y*x + gamma1*x + gamma2*y",
        ],
        constraints: C2_CONSTRAINTS,
        deviations: &["gamma2 throughout, where one passage writes a capital Gamma2"],
        ..C1
    },
    CaseEntry {
        id: C2b,
        admissible: Q_DIV,
        roots: XI_Q,
        params: &[
            range("mu", "1", "q-1"),
            fld("alpha1"),
            fld("alpha2"),
            fld("beta1"),
            fld("beta2"),
            fld("gamma1"),
            fld("gamma2"),
        ],
        relations: &[
            "g*x = x*g",
            "g*y = xi^{mu}*y*g",
            "x^{p} = alpha1*x + alpha2*y",
            "y^{p} = beta1*x + beta2*y",
            "x*y = y*x + gamma1*x + gamma2*y",
        ],
        constraints: C2_CONSTRAINTS,
        deviations: &["gamma2 throughout, where one passage writes a capital Gamma2"],
        ..C1
    },
    CaseEntry {
        id: C3a1,
        admissible: Q_DIV,
        roots: XI_Q,
        params: C_PARAMS,
        relations: &[
            "g*x = xi*x*g",
            "g*y = y*g",
            "x^{p} = alpha1*x + alpha2*y",
            "y^{p} = beta1*x + beta2*y",
            "x*y = y*x + gamma1*x + gamma2*y",
        ],
        constraints: C3A_CONSTRAINTS,
        ..C1
    },
    CaseEntry {
        id: C3a2,
        admissible: Q_NDIV,
        roots: XI_Q,
        params: C_PARAMS,
        relations: &[
            "g*x = xi*x*g",
            "g*y = y*g",
            "x^{p} = alpha1*x + alpha2*y",
            "y^{p} = beta1*x + beta2*y",
            "x*y = y*x + gamma1*x + gamma2*y",
        ],
        constraints: C3A_CONSTRAINTS,
        ..C1
    },
    CaseEntry {
        id: C3b,
        admissible: Q_DIV,
        roots: XI_Q,
        params: C_PARAMS,
        relations: &[
            "g*x = xi*x*g",
            "g*y = xi*y*g",
            "x^{p} = alpha1*x + alpha2*y",
            "y^{p} = beta1*x + beta2*y",
            "x*y = y*x + gamma1*x + gamma2*y",
        ],
        constraints: &[
            stated("alpha1*(xi - xi^{p})", GX_P),
            stated("alpha2*(xi - xi^{p})", GX_P),
            stated("beta1*(xi - xi^{p})", GY_P),
            stated("beta2*(xi - xi^{p})", GY_P),
            stated("gamma1*(xi - xi^2)", GXY),
            stated("gamma2*(xi - xi^2)", GXY),
            stated("alpha1*gamma1", XP_Y),
            stated("beta2*gamma1 - gamma1^{p}", X_YP),
        ],
        deviations: &["the normalisation beta2 = 1 is not imposed; beta2 = 0 gives the graded member of the same family"],
        ..C1
    },
    CaseEntry { id: C3c1, admissible: Q_DIV, roots: XI_Q, params: C_MU, relations: C3_RELS, constraints: C3_CONSTRAINTS, ..C1 },
    CaseEntry {
        id: C3c2,
        admissible: &["q | p-mu"],
        roots: XI_Q,
        params: C_MU,
        relations: C3_RELS,
        constraints: C3_CONSTRAINTS,
        ..C1
    },
    CaseEntry {
        id: C3c3,
        admissible: &["q | p*mu-1"],
        roots: XI_Q,
        params: C_MU,
        relations: C3_RELS,
        constraints: C3_CONSTRAINTS,
        ..C1
    },
    CaseEntry {
        id: C3c4,
        admissible: &["!(q | p-1)", "!(q | p-mu)", "!(q | p*mu-1)"],
        roots: XI_Q,
        params: C_MU,
        relations: C3_RELS,
        constraints: C3_CONSTRAINTS,
        ..C1
    },
    CaseEntry {
        id: C4a1,
        admissible: Q_DIV,
        params: &[
            range("mu", "0", "0"),
            bin("lambda1"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
            fld("lambda6"),
            fld("lambda7"),
        ],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g",
            "x^{p} = lambda3*x + lambda4*(1 - g^{p})",
            "y^{p} = lambda5*y",
            "x*y = y*x + lambda6*x + lambda7*(1 - g)",
        ],
        constraints: &[
            stated("lambda1", CONJ),
            stated("lambda3*lambda6", XP_Y),
            stated("lambda3*lambda7", XP_Y),
            stated("(lambda5 - lambda6^{p-1})*lambda6", X_YP),
            stated("(lambda5 - lambda6^{p-1})*lambda7", X_YP),
        ],
        deviations: &["lambda1 stays in the relations after being shown to vanish; it is kept as a parameter with the constraint lambda1 = 0"],
        ..C4
    },
    CaseEntry {
        id: C4a2,
        admissible: Q_NDIV,
        params: &[range("mu", "0", "0"), bin("lambda1"), fld("lambda3"), fld("lambda4"), fld("lambda5"), fld("lambda6")],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g",
            "x^{p} = lambda1^{p-1}*x + lambda3*(1 - g^{p})",
            "y^{p} = lambda4*y",
            "x*y = y*x + lambda5*x + lambda6*(1 - g)",
        ],
        constraints: &[
            stated("lambda1*lambda5", XP_Y),
            stated("lambda6", SKEW),
            stated("lambda5^{p} - lambda5*lambda4", X_YP),
            forced("lambda1", CONJ),
        ],
        ..C4
    },
    CaseEntry {
        id: C4b1,
        admissible: Q_DIV,
        params: &[
            range("mu", "1", "1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
            fld("lambda6"),
            fld("lambda7"),
            fld("lambda8"),
            fld("lambda9"),
        ],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda2*(g - g^2)",
            "x^{p} = lambda3*x + lambda4*y + lambda5*(1 - g^{p})",
            "y^{p} = lambda6*x + lambda7*y + lambda8*(1 - g^{p})",
            "x*y = y*x - lambda1*y + lambda2*x + lambda9*(1 - g^2)",
        ],
        constraints: &[
            stated("lambda1", CONJ),
            stated("lambda2", CONJ),
            stated("lambda3*lambda9", XP_Y),
            stated("lambda7*lambda9", X_YP),
        ],
        ..C4
    },
    CaseEntry {
        id: C4b2,
        admissible: Q_NDIV,
        params: &[
            range("mu", "1", "1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
        ],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda2*(g - g^2)",
            "x^{p} = lambda1^{p-1}*x + lambda3*(1 - g^{p})",
            "y^{p} = lambda2^{p-1}*y + lambda4*(1 - g^{p})",
            "x*y = y*x - lambda1*y + lambda2*x + lambda5*(1 - g^2)",
        ],
        constraints: &[forced("lambda1", CONJ), forced("lambda2", CONJ)],
        deviations: &["y^p - lambda2^(p-1) y on the left of the y^p relation, where the display has lambda2^(p-1) x"],
        ..C4
    },
    CaseEntry {
        id: C4c1,
        admissible: Q_DIV,
        params: &[
            range("mu", "2", "q-1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
            fld("lambda6"),
            fld("lambda7"),
        ],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda2*(g - g^{mu+1})",
            "x*y = y*x - {mu}*lambda1*y + lambda2*x + lambda3*(1 - g^{mu+1})",
            "y^{p} = lambda4*y + lambda5*(1 - g^{mu})",
            "x^{p} = lambda6*x + lambda7*(1 - g^{p})",
        ],
        constraints: &[
            stated("lambda1", CONJ),
            stated("lambda2", CONJ),
            stated("lambda3*lambda6", XP_Y),
            stated("lambda3*lambda4", X_YP),
        ],
        ..C4
    },
    CaseEntry {
        id: C4c2,
        admissible: Q_NDIV,
        params: &[
            range("mu", "2", "q-1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
        ],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda2*(g - g^{mu+1})",
            "x*y = y*x - {mu}*lambda1*y + lambda2*x + lambda3*(1 - g^{mu+1})",
            "y^{p} = ({mu}*lambda2)^{p-1}*y + lambda4*(1 - g^{p*mu})",
            "x^{p} = lambda1^{p-1}*x + lambda5*(1 - g^{p})",
        ],
        constraints: &[
            stated("lambda2", CONJ),
            stated("(lambda1 - 1)*lambda1", XP_Y),
            stated("(lambda1 - 1)*lambda3", XP_Y),
            forced("lambda1", CONJ),
        ],
        ..C4
    },
    CaseEntry {
        id: C5a,
        admissible: Q_DIV,
        params: &[
            range("nu", "1", "q-1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda5"),
            fld("lambda6"),
        ],
        relations: &[
            "g*x = x*g",
            "g*y = y*g + lambda1*(g - g^{nu+1})",
            "x^{p} = lambda2*x",
            "y^{p} = lambda5*y + lambda6*(1 - g^{p*nu})",
            "x*y = y*x + lambda3*y + lambda4*(1 - g^{nu})",
        ],
        constraints: &[
            stated("lambda1", CONJ),
            stated("(lambda2 - 1)*lambda3", XP_Y),
            stated("(lambda2 - 1)*lambda4", XP_Y),
            stated("lambda5*lambda3", X_YP),
            stated("lambda5*lambda4", X_YP),
            forced("lambda3^{p} - lambda2*lambda3", XP_Y),
            forced("(lambda3^{p-1} - lambda2)*lambda4", XP_Y),
        ],
        deviations: &["lambda1, lambda2 range over {0, 1}, read through a mistyped set symbol"],
        ..C5
    },
    CaseEntry {
        id: C5b,
        admissible: Q_NDIV,
        params: &[
            range("nu", "1", "q-1"),
            bin("lambda1"),
            bin("lambda2"),
            fld("lambda3"),
            fld("lambda4"),
            fld("lambda7"),
        ],
        relations: &[
            "g*x = x*g",
            "g*y = y*g + lambda1*(g - g^{nu+1})",
            "x^{p} = lambda2*x",
            "y^{p} = ({nu}*lambda1)^{p-1}*y + lambda7*(1 - g^{p*nu})",
            "x*y = y*x + lambda3*y + lambda4*(1 - g^{nu})",
        ],
        constraints: &[
            stated("lambda1*lambda3", X_YP),
            stated("lambda2*lambda3 - lambda3^{p}", XP_Y),
            stated("lambda2*lambda4 - lambda3^{p-1}*lambda4", XP_Y),
            stated("lambda1*lambda4", X_YP),
            forced("lambda1", CONJ),
        ],
        deviations: &["lambda1, lambda2 range over {0, 1}, read through a mistyped set symbol"],
        ..C5
    },
    // ---- p^2 q, group C_q, y of weight p with a non-primitive coproduct.
    CaseEntry {
        id: D1a,
        admissible: &["p == 2"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*x = x*g",
            "g*y = y*g",
            "x^{p} = lambda1*x",
            "y^{p} = lambda1*y + lambda3*x",
            "x*y = y*x + lambda2*x",
        ],
        coproduct: D12_COP,
        tails: OMEGA0,
        constraints: &[stated("lambda2", X_YP)],
        ..D
    },
    CaseEntry {
        id: D1b,
        admissible: &["p > 2"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*x = x*g",
            "g*y = y*g",
            "x^{p} = lambda1*x",
            "y^{p} = lambda1*y + lambda3*x",
            "x*y = y*x + lambda2*x",
        ],
        coproduct: D12_COP,
        tails: OMEGA0,
        constraints: &[stated("lambda2", X_YP)],
        ..D
    },
    CaseEntry {
        id: D2a,
        admissible: &["p == 2"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*x = xi*x*g",
            "g*y = xi^2*y*g",
            "x^2 = lambda1*x",
            "y^2 = lambda1*y + lambda3*x",
            "x*y = y*x + lambda2*x",
        ],
        coproduct: D12_COP,
        tails: OMEGA0,
        constraints: &[
            stated("lambda1*(xi^2 - xi)", GX_P),
            stated("lambda3*(xi^4 - xi)", GY_P),
            stated("lambda2*(xi^3 - xi)", GXY),
        ],
        ..D
    },
    CaseEntry {
        id: D2b,
        admissible: &["p > 2"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*x = xi*x*g",
            "g*y = xi^{p}*y*g",
            "x^{p} = lambda1*x",
            "y^{p} = lambda1*y + lambda3*x",
            "x*y = y*x + lambda2*x",
        ],
        coproduct: D12_COP,
        tails: OMEGA0,
        constraints: &[
            stated("lambda1*(xi^{p} - xi)", GX_P),
            stated("lambda3*(xi^{p*p} - xi)", GY_P),
            stated("lambda1*(xi^{p*p} - xi^{p})", GY_P),
            stated("lambda2^{p-1}*lambda1*(xi^{p*p} - xi)", X_YP),
            stated("lambda2*(xi^{p+1} - xi)", GXY),
        ],
        ..D
    },
    CaseEntry {
        id: D3a1,
        admissible: &["p == 2", "q == 3"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3"), fld("lambda6"), fld("lambda7")],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda1*(x*g^2 + x*g + g^2 + g) + lambda3*(g - g^3)",
            "x^2 = lambda1*x + lambda2*(1 - g^2)",
            "y^2 = lambda1*y + lambda2*(g + g^2) + lambda6*x + lambda7*(1 - g)",
            "x*y = y*x + (lambda1 + lambda3)*x + lambda1*lambda2*g^2 + lambda1*lambda2*g^3",
        ],
        coproduct: D3_COP,
        tails: OMEGA1,
        constraints: &[
            stated("lambda3", X_YP),
            stated("lambda1*(lambda6 - 1)", X_YP),
            stated("lambda1*lambda7", X_YP),
            forced("lambda1", CONJ),
        ],
        ..D
    },
    CaseEntry {
        id: D3a2,
        admissible: &["p == 2", "q > 3"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3"), fld("lambda5"), fld("lambda8")],
        relations: &[
            "g*x = x*g + lambda1*(g - g^2)",
            "g*y = y*g + lambda1*(x*g^2 + x*g + g^2 + g) + lambda3*(g - g^3)",
            "x^2 = lambda1*x + lambda2*(1 - g^2)",
            "y^2 = lambda1*y + (lambda1*lambda2 + lambda5)*(x*g^3 + x) + lambda2*(g^2 + g^4) + lambda8*(1 - g^4)",
            "x*y = y*x + (lambda1 + lambda3)*x + lambda1*lambda2*g^2 + lambda1*lambda2*g^3",
        ],
        coproduct: D3_COP,
        tails: OMEGA1,
        constraints: &[
            stated("lambda3", X_YP),
            stated("lambda1*lambda2", X_YP),
            stated("lambda1", CONJ),
            forced("lambda5", SKEW),
        ],
        ..D
    },
    CaseEntry {
        id: D3b1,
        admissible: &["p > 2", "q | p+1"],
        params: &[bin("nu1"), fld("nu2")],
        relations: &["g*x = x*g", "x^{p} = 0", "g*y = y*g", "x*y = y*x", "y^{p} = nu1*x + nu2*(1 - g)"],
        coproduct: D3_COP,
        tails: OMEGA1,
        caveat: D3B_CAVEAT,
        ..D
    },
    CaseEntry {
        id: D3b2,
        admissible: &["p > 2", "q | p-1"],
        params: &[bin("lambda3"), fld("nu1"), fld("nu2")],
        relations: &[
            "g*x = x*g",
            "x^{p} = 0",
            "g*y = y*g",
            "x*y = y*x + lambda3*(1 - g^{p+1})",
            "y^{p} = {fact(p-1)}*lambda3^{p-1}*(1 - g^{p+1})^{p-1}*x + nu1*x + nu2*(1 - g)",
        ],
        coproduct: D3_COP,
        tails: OMEGA1,
        constraints: &[forced("lambda3*{q-2}", YP_Y)],
        caveat: D3B_CAVEAT,
        ..D
    },
    CaseEntry {
        id: D3b3,
        admissible: &["p > 2", "!(q | p+1)", "!(q | p-1)"],
        params: &[bin("lambda3"), fld("nu")],
        relations: &[
            "g*x = x*g",
            "x^{p} = 0",
            "g*y = y*g",
            "x*y = y*x + lambda3*(1 - g^{p+1})",
            "y^{p} = {fact(p-1)}*lambda3^{p-1}*(1 - g^{p+1})^{p-1}*x + nu*(1 - g^{p*p})",
        ],
        coproduct: D3_COP,
        tails: OMEGA1,
        constraints: &[forced("lambda3", YP_Y)],
        caveat: D3B_CAVEAT,
        ..D
    },
    // ---- p q^2.
    CaseEntry {
        id: AA1,
        class: PQ2,
        group: CPQ,
        roots: XI_Q,
        gens: G_PQ_X,
        params: &[bin("lambda")],
        relations: &["g*x = xi*x*g", "x^{q} = lambda*(1 - g^{q})"],
        coproduct: SKEW_G,
        deviations: &["R = K[x]/(x^q), where the table row prints x^p"],
        ..BASE
    },
    CaseEntry {
        id: AA2,
        class: PQ2,
        group: CPQ,
        roots: XI_Q,
        gens: G_PQ_X,
        relations: &["g*x = xi^{p}*x*g", "x^{q} = 0"],
        coproduct: SKEW_GP,
        deviations: &["R = K[x]/(x^q), where the table row prints x^p"],
        ..BASE
    },
    CaseEntry {
        id: AB1a,
        class: PQ2,
        group: CQ2,
        gens: G_Q2_X,
        params: &[bin("lambda")],
        relations: &["g*x = x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        ..BASE
    },
    CaseEntry {
        id: AB1b,
        class: PQ2,
        group: CQ2,
        gens: G_Q2_X,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda1*x + lambda2*(1 - g^{p})"],
        coproduct: SKEW_G,
        constraints: &[forced("lambda1", CONJ)],
        ..BASE
    },
    CaseEntry {
        id: AB1c1,
        class: PQ2,
        group: CQ2,
        admissible: Q_DIV,
        gens: G_Q2_X,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^{q+1})", "x^{p} = lambda2*x + lambda3*(1 - g^{p*q})"],
        coproduct: SKEW_GQ,
        constraints: &[stated("lambda1", CONJ)],
        ..BASE
    },
    CaseEntry {
        id: AB1c2,
        class: PQ2,
        group: CQ2,
        admissible: Q_NDIV,
        gens: G_Q2_X,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^{q+1})", "x^{p} = ({q}*lambda1)^{p-1}*x + lambda2*(1 - g^{p*q})"],
        coproduct: SKEW_GQ,
        constraints: &[forced("lambda1", CONJ)],
        ..BASE
    },
    CaseEntry {
        id: AB1d,
        class: PQ2,
        group: CQ2,
        roots: ZETA,
        gens: G_Q2_X,
        params: &[bin("lambda1")],
        relations: &["g*x = zeta*x*g", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda1*(zeta - zeta^{p})", GX_P)],
        ..BASE
    },
    CaseEntry {
        id: AB1e,
        class: PQ2,
        group: CQ2,
        roots: ZETA,
        gens: G_Q2_X,
        params: &[bin("lambda1")],
        relations: &["g*x = zeta^{q}*x*g", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda1*(zeta^{q} - zeta^{q*p})", GX_P)],
        ..BASE
    },
    CaseEntry {
        id: AB2a,
        params: &[bin("lambda1")],
        relations: &["g*h = h*g", "g*x = x*g", "h*x = x*h", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        ..AB2
    },
    CaseEntry {
        id: AB2b,
        params: &[bin("lambda1")],
        relations: &["g*h = h*g", "g*x = x*g", "h*x = xi*x*h", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda1*(xi - xi^{p})", HX_P)],
        ..AB2
    },
    CaseEntry {
        id: AB2c,
        params: &[bin("lambda1")],
        relations: &["g*h = h*g", "g*x = xi*x*g", "h*x = x*h", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda1*(xi - xi^{p})", GX_P)],
        ..AB2
    },
    CaseEntry {
        id: AB2d,
        params: &[bin("lambda1")],
        relations: &["g*h = h*g", "g*x = xi*x*g", "h*x = xi*x*h", "x^{p} = lambda1*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda1*(xi - xi^{p})", GX_P)],
        ..AB2
    },
    CaseEntry {
        id: AB2e1,
        admissible: Q_DIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3"), fld("lambda4")],
        relations: &[
            "g*h = h*g",
            "g*x = x*g + lambda1*(g - g^2)",
            "h*x = x*h + lambda2*(h - h*g)",
            "x^{p} = lambda3*x + lambda4*(1 - g^{p})",
        ],
        coproduct: SKEW_G,
        constraints: &[stated("lambda1", CONJ), stated("lambda2", CONJ)],
        ..AB2
    },
    CaseEntry {
        id: AB2e2,
        admissible: Q_NDIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*h = h*g",
            "g*x = x*g + lambda1*(g - g^2)",
            "h*x = x*h + lambda2*(h - h*g)",
            "x^{p} = lambda1^{p-1}*x + lambda3*(1 - g^{p})",
        ],
        coproduct: SKEW_G,
        constraints: &[stated("(lambda1 - 1)*lambda2", HX_P), forced("lambda1", CONJ), forced("lambda2", CONJ)],
        deviations: &["lambda3 in the x^p relation, where one passage calls it lambda4"],
        ..AB2
    },
    CaseEntry {
        id: AB2f1,
        admissible: Q_DIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3"), fld("lambda4")],
        relations: &[
            "g*h = h*g",
            "g*x = x*g + lambda1*(g - g^2)",
            "h*x = xi*x*h + lambda2*(h - h*g)",
            "x^{p} = lambda3*x + lambda4*(1 - g^{p})",
        ],
        coproduct: SKEW_G,
        constraints: &[stated("lambda1", CONJ), stated("lambda2*lambda3 + lambda4 - lambda4*xi - lambda2", HX_P)],
        ..AB2
    },
    CaseEntry {
        id: AB2f2,
        admissible: Q_NDIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &[
            "g*h = h*g",
            "g*x = x*g + lambda1*(g - g^2)",
            "h*x = xi*x*h + lambda2*(h - h*g)",
            "x^{p} = lambda1^{p-1}*x + lambda3*(1 - g^{p})",
        ],
        coproduct: SKEW_G,
        constraints: &[stated("lambda1", CONJ), stated("lambda2", HX_P), stated("lambda3", HX_P)],
        ..AB2
    },
    CaseEntry {
        id: AC1,
        class: PQ2,
        group: CQ,
        roots: XI_Q,
        gens: G_Q_XY,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = xi*x*g", "g*y = y*g", "x^{q} = 0", "y^{p} = lambda1*y", "x*y = y*x + lambda2*x + lambda3*(1 - g)"],
        coproduct: &[("x", "x (#) 1 + g (#) x"), ("y", "y (#) 1 + 1 (#) y")],
        constraints: &[stated("lambda3", SKEW), stated("lambda2^{p} - lambda1*lambda2", X_YP)],
        deviations: &["x^q = 0 from the Nichols algebra of x, where the text writes x^p"],
        ..BASE
    },
    CaseEntry {
        id: AD,
        class: PQ2,
        group: CQ,
        roots: XI_Q,
        gens: &[GroupLike("g", "q"), Free("x", "1"), Free("y", "q")],
        params: &[bin("lambda1")],
        relations: &["g*x = xi*x*g", "g*y = y*g", "x*y = y*x + lambda1*x", "x^{q} = 0", "y^{p} = lambda1^{p-1}*y"],
        coproduct: &[("x", "x (#) 1 + g (#) x"), ("y", "y (#) 1 + 1 (#) y")],
        tails: &[("y", Tail::ThetaQ { x: "x", g: "g", xi: "xi" })],
        deviations: &["y^p = lambda1^(p-1) y, forced by the overlap x*y^p; the display has y^p = 0"],
        ..BASE
    },
    // ---- p q r, group C_qr.
    CaseEntry { id: BA1, params: &[bin("lambda")], relations: &["g*x = x*g", "x^{p} = lambda*x"], coproduct: PRIM_X, ..BA },
    CaseEntry {
        id: BA2,
        params: &[bin("lambda")],
        relations: &["g*x = theta*x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(theta - theta^{p})", GX_P)],
        ..BA
    },
    CaseEntry {
        id: BA3,
        params: &[bin("lambda")],
        relations: &["g*x = theta^{q}*x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(theta^{q} - theta^{q*p})", GX_P)],
        ..BA
    },
    CaseEntry {
        id: BA4,
        params: &[bin("lambda")],
        relations: &["g*x = theta^{r}*x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(theta^{r} - theta^{r*p})", GX_P)],
        ..BA
    },
    CaseEntry {
        id: BA5a,
        admissible: &["q*r | p-1"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda2*x + lambda3*(1 - g)"],
        coproduct: SKEW_G,
        constraints: &[stated("lambda1", CONJ)],
        ..BA
    },
    CaseEntry {
        id: BA5b,
        admissible: &["!(q*r | p-1)"],
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda1^{p-1}*x + lambda2*(1 - g^{p})"],
        coproduct: SKEW_G,
        constraints: &[forced("lambda1", CONJ)],
        ..BA
    },
    CaseEntry {
        id: BA6a,
        admissible: &["r | p-1"],
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^{q+1})", "x^{p} = lambda2*x + lambda3*(1 - g^{p*q})"],
        coproduct: SKEW_GQ,
        constraints: &[stated("lambda1", CONJ)],
        ..BA
    },
    CaseEntry {
        id: BA6b,
        admissible: &["!(r | p-1)"],
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^{q+1})", "x^{p} = ({q}*lambda1)^{p-1}*x + lambda2*(1 - g^{p*q})"],
        coproduct: SKEW_GQ,
        constraints: &[forced("lambda1", CONJ)],
        ..BA
    },
    CaseEntry {
        id: BA7a,
        admissible: Q_DIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^{r+1})", "x^{p} = lambda2*x + lambda3*(1 - g^{p*r})"],
        coproduct: SKEW_GR,
        constraints: &[stated("lambda1", CONJ)],
        deviations: &["g^(pr) = g^r under q | p-1, where the text writes g^(pq) = g^q"],
        ..BA
    },
    CaseEntry {
        id: BA7b,
        admissible: Q_NDIV,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^{r+1})", "x^{p} = ({r}*lambda1)^{p-1}*x + lambda2*(1 - g^{p*r})"],
        coproduct: SKEW_GR,
        constraints: &[forced("lambda1", CONJ)],
        deviations: &["[g^r, x] = r lambda1 (...) and (r lambda1)^(p-1), where the text writes q in place of r"],
        ..BA
    },
    // ---- p q r, group Z_q x| Z_r.
    CaseEntry {
        id: BB1,
        class: PQR,
        group: "Z_q x| Z_r",
        admissible: &["r | q-1"],
        twist: Some(("r", "q")),
        gens: &[GroupLike("g", "r"), GroupLike("h", "q"), Free("x", "1")],
        affine: &[("g", "q", "0")],
        params: &[bin("lambda")],
        relations: &["g*h = h^{t}*g", "g*x = x*g", "h*x = x*h", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        deviations: &["group relations g^r = h^q = 1, where the list of possible relations writes g^q = 1, g^r = 1"],
        ..BASE
    },
    CaseEntry {
        id: BB2,
        class: PQR,
        group: "Z_q x| Z_r",
        admissible: &["r | q-1"],
        twist: Some(("r", "q")),
        roots: XI_R,
        gens: &[GroupLike("g", "r"), GroupLike("h", "q"), Free("x", "1")],
        affine: &[("g", "q", "0")],
        params: &[bin("lambda")],
        relations: &["g*h = h^{t}*g", "g*x = xi*x*g", "h*x = x*h", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[forced("lambda*(xi - xi^{p})", GX_P)],
        deviations: &["group relations g^r = h^q = 1, where the list of possible relations writes g^q = 1, g^r = 1"],
        ..BASE
    },
    // ---- p q, group C_q.
    CaseEntry { id: CA1, params: &[bin("lambda")], relations: &["g*x = x*g", "x^{p} = lambda*x"], coproduct: PRIM_X, ..CA },
    CaseEntry {
        id: CA2,
        params: &[bin("lambda")],
        relations: &["g*x = xi*x*g", "x^{p} = lambda*x"],
        coproduct: PRIM_X,
        constraints: &[stated("lambda*(xi - xi^{p})", GX_P)],
        ..CA
    },
    CaseEntry {
        id: CA3a,
        admissible: Q_DIV,
        params: &[bin("lambda1"), fld("lambda2"), fld("lambda3")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda2*x + lambda3*(1 - g)"],
        coproduct: SKEW_G,
        constraints: &[stated("lambda1", CONJ)],
        ..CA
    },
    CaseEntry {
        id: CA3b,
        admissible: Q_NDIV,
        params: &[bin("lambda1"), fld("lambda2")],
        relations: &["g*x = x*g + lambda1*(g - g^2)", "x^{p} = lambda1^{p-1}*x + lambda2*(1 - g^{p})"],
        coproduct: SKEW_G,
        constraints: &[forced("lambda1", CONJ)],
        ..CA
    },
];

const C2_CONSTRAINTS: &[Constraint] = &[
    stated("alpha2*(xi^{mu} - 1)", GX_P),
    stated("beta1*(xi^{p*mu} - 1)", GY_P),
    stated("beta2*(xi^{p*mu} - xi^{mu})", GY_P),
    stated("gamma1*(xi^{mu} - 1)", GXY),
    stated("alpha1*gamma2 - gamma2^{p}", XP_Y),
    stated("beta2*gamma2", X_YP),
];

const C3A_CONSTRAINTS: &[Constraint] = &[
    stated("alpha1*(xi - xi^{p})", GX_P),
    stated("alpha2*(1 - xi^{p})", GX_P),
    stated("beta1*(xi - 1)", GY_P),
    stated("gamma2*(1 - xi)", GXY),
    stated("alpha1*gamma1", XP_Y),
    stated("beta2*gamma1 - gamma1^{p}", X_YP),
];
