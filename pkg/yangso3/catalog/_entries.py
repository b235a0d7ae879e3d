from __future__ import annotations

from dataclasses import dataclass

SUITES = ("rmatrix", "rtt", "unitarity", "gauss", "relations", "drinfeld", "roundtrip")


@dataclass(frozen=True)
class CatalogEntry:
    """
    One verified identity.

    Args:
        id (str): Identity id used in verdicts and reports.
        suite (str): Suite that runs the identity.
        anchor (str): LaTeX form of the identity.
        clearing (str): Polynomial both sides are multiplied by, "1" if none.
        description (str): Short human-readable statement.
    """

    id: str
    suite: str
    anchor: str
    clearing: str
    description: str

    def line(self) -> str:
        return f"{self.id:<34} {self.suite:<10} clear[{self.clearing}]  {self.anchor}"


def _e(id: str, suite: str, anchor: str, clearing: str, description: str) -> CatalogEntry:
    return CatalogEntry(id, suite, anchor, clearing, description)


CATALOG: tuple[CatalogEntry, ...] = (
    # rmatrix
    _e("rmatrix.flip_involution", "rmatrix", r"P=\sum_{i,j=-n}^ne_{ij}\otimes e_{ji}", "1", "P^2 = I"),
    _e("rmatrix.q_square", "rmatrix", r"Q=P^{t}=\sum_{i,j=-n}^{n}e_{ij}\otimes e_{-i,-j}", "1", "Q^2 = N Q"),
    _e("rmatrix.pq_absorb", "rmatrix", r"Q=P^{t}", "1", "P Q = Q"),
    _e("rmatrix.qp_absorb", "rmatrix", r"Q=P^{t}", "1", "Q P = Q"),
    _e("rmatrix.q_partial_transpose", "rmatrix", r"(e_{ij})^t=e_{-j,-i}", "1", "Q is the partial transpose of P"),
    _e(
        "rmatrix.yang_baxter",
        "rmatrix",
        "rational solution of Yang-Baxter equation",
        "(u-v)(u-v-k)u(u-k)v(v-k)",
        "R12(u-v)R13(u)R23(v) = R23(v)R13(u)R12(u-v) as polynomials",
    ),
    _e(
        "rmatrix.yang_baxter_points",
        "rmatrix",
        "rational solution of Yang-Baxter equation",
        "1",
        "Yang-Baxter equation at seeded rational points",
    ),
    _e("rmatrix.unitarity_scalar", "rmatrix", "consider the R-matrix", "1", "R(u)R(-u) is scalar"),
    # rtt
    _e("rtt.constant_term", "rtt", r"t^{(0)}_{ij}=\delta_{ij}", "1", "t_ij(u) = delta_ij + O(u^-1)"),
    _e("rtt.matrix", "rtt", "the following RTT form", "(u-v)(u-v-k)", "R(u-v)T1(u)T2(v) = T2(v)T1(u)R(u-v)"),
    _e(
        "rtt.generating",
        "rtt",
        "equivalently in terms of generating series",
        "(u-v)(u-v-1/2)",
        "81 entrywise relations [t_ij(u), t_kl(v)]",
    ),
    _e(
        "rtt.inverse_matrix",
        "rtt",
        "can be rewritten equivalently as follows",
        "(u-v)(u-v-k)",
        "T2^-1(v)R(u-v)T1(u) = T1(u)R(u-v)T2^-1(v)",
    ),
    _e(
        "rtt.inverse_generating",
        "rtt",
        r"the ij-th element of $T^{-1}(u)$",
        "(u-v)(u-v-1/2)",
        "81 entrywise relations [t_pq(u), t'_rs(v)]",
    ),
    # unitarity
    _e("unitarity.product", "unitarity", r"T(u)T^t(u+\kappa)=T^t(u+\kappa)T(u)=1", "1", "T(u)T^t(u+k) = 1"),
    _e(
        "unitarity.inverse_is_transpose",
        "unitarity",
        r"we have $T^{t}(u+\frac{1}{2})=T^{-1}(u)$",
        "1",
        "T^-1(u) = T^t(u+1/2)",
    ),
    _e(
        "unitarity.normalization",
        "unitarity",
        r"T(u)T^t(u+\kappa)=T^t(u+\kappa)T(u)=1",
        "1",
        "c(u)c(u+k)g(u) = 1 for every evaluation point",
    ),
    # gauss
    _e("gauss.reconstruction", "gauss", "the following unique decomposition", "1", "F(u)K(u)E(u) = T(u)"),
    _e(
        "gauss.leading_terms",
        "gauss",
        r"k_{i}(u)=1+\sum^{\infty}_{r=1}k^{(r)}_{i}u^{-r}",
        "1",
        "k = 1 + O(u^-1), e, f = O(u^-1)",
    ),
    _e("gauss.unitarity_k1", "gauss", r"k_{1}^{-1}(u)=k_{-1}(u+\frac{1}{2})", "1", "k_1^-1(u) = k_-1(u+1/2)"),
    _e(
        "gauss.unitarity_e01",
        "gauss",
        r"-e_{01}(u)k_{1}^{-1}(u)=k_{-1}(u+\frac{1}{2})e_{-1,0}(u+\frac{1}{2})",
        "1",
        "-e_01(u)k_1^-1(u) = k_-1(u+1/2)e_-10(u+1/2)",
    ),
    _e(
        "gauss.unitarity_f10",
        "gauss",
        r"-k_{1}^{-1}(u)f_{10}(u)=f_{0,-1}(u+\frac{1}{2})k_{-1}(u+\frac{1}{2})",
        "1",
        "-k_1^-1(u)f_10(u) = f_0-1(u+1/2)k_-1(u+1/2)",
    ),
    _e(
        "gauss.unitarity_k0",
        "gauss",
        r"k_{0}^{-1}(u)+e_{01}(u)k_{1}^{-1}(u)f_{10}(u)=",
        "1",
        "k_0^-1(u) + e_01 k_1^-1 f_10(u) = k_0(u+1/2) + f_0-1 k_-1 e_-10(u+1/2)",
    ),
    # relations
    _e("gauss.kminus1_commute", "relations", r"[k_{-1}(u),k_{-1}(v)]=0", "(u-v)", "[k_-1(u), k_-1(v)] = 0"),
    _e("gauss.kminus1_k0_commute", "relations", r"[k_{-1}(u),k_0(v)]=0", "(u-v)", "[k_-1(u), k_0(v)] = 0"),
    _e(
        "gauss.kminus1_e",
        "relations",
        r"k_{-1}(u)(e_{-1,0}(v)-e_{-1,0}(u))",
        "(u-v)",
        "(u-v)[k_-1(u), e_-10(v)] = k_-1(u)(e_-10(v) - e_-10(u))",
    ),
    _e(
        "gauss.kminus1_f",
        "relations",
        r"(f_{0,-1}(u)-f_{0,-1}(v))k_{-1}(u)",
        "(u-v)",
        "(u-v)[k_-1(u), f_0-1(v)] = (f_0-1(u) - f_0-1(v))k_-1(u)",
    ),
    _e(
        "gauss.e_f_commutator",
        "relations",
        r"k_{-1}^{-1}(u)k_{0}(u)-k_{-1}^{-1}(v)k_{0}(v)",
        "(u-v)",
        "(u-v)[e_-10(u), f_0-1(v)] = H(u) - H(v)",
    ),
    _e("gauss.e01_shift", "relations", r"e_{01}(u)=-e_{-1,0}(u-\frac{1}{2})", "1", "e_01(u) = -e_-10(u-1/2)"),
    _e("gauss.f10_shift", "relations", r"f_{10}(u)=-f_{0,-1}(u-\frac{1}{2})", "1", "f_10(u) = -f_0-1(u-1/2)"),
    _e(
        "gauss.k0_factor",
        "relations",
        r"k_0(u)=k_{-1}(u)k^{-1}_{-1}(u+\frac{1}{2})",
        "1",
        "k_0(u) = k_-1(u)k_-1^-1(u+1/2)",
    ),
    _e(
        "gauss.h_shift",
        "relations",
        r"we obtain $k^{-1}_{-1}(u)k_{0}(u)=k^{-1}_{-1}(u+\frac{1}{2})$",
        "1",
        "k_-1^-1(u)k_0(u) = k_-1^-1(u+1/2)",
    ),
    _e(
        "gauss.k0_triangle",
        "relations",
        r"k_0(u)=k_{-1}(u)k^{-1}_{-1}(u+\frac{1}{2})",
        "1",
        "k_0(u)k_-1(u+1/2) = k_-1(u)",
    ),
    _e(
        "gauss.h_e_anticommutator",
        "relations",
        r"\{k^{-1}_{-1}(u)k_{0}(u),e_{-1,0}(u)-e_{-1,0}(v)\}",
        "(u-v)",
        "[H(u), e_-10(v)] = {H(u), e_-10(u) - e_-10(v)}/(2(u-v))",
    ),
    _e(
        "gauss.h_f_anticommutator",
        "relations",
        r"\{k^{-1}_{-1}(u)k_{0}(u),f_{0,-1}(u)-f_{0,-1}(v)\}",
        "(u-v)",
        "[H(u), f_0-1(v)] = -{H(u), f_0-1(u) - f_0-1(v)}/(2(u-v))",
    ),
    _e(
        "gauss.e_square",
        "relations",
        r"(e_{-1,0}(u)-e_{-1,0}(v))^2",
        "(u-v)",
        "[e_-10(u), e_-10(v)] = (e_-10(u) - e_-10(v))^2/(2(u-v))",
    ),
    _e(
        "gauss.f_square",
        "relations",
        r"(f_{0,-1}(u)-f_{0,-1}(v))^2",
        "(u-v)",
        "[f_0-1(u), f_0-1(v)] = -(f_0-1(u) - f_0-1(v))^2/(2(u-v))",
    ),
    _e(
        "gauss.e_m11_recursion",
        "relations",
        r"3e_{-1,1}(u+\frac{1}{2})-e_{-1,1}(u)",
        "1",
        "3e_-11(u+1/2) - e_-11(u) + 3e_-10(u+1/2)e_-10(u) - 2e_-10(u)^2 = 0",
    ),
    _e(
        "gauss.e_m11_bracket",
        "relations",
        r"e_{-1,1}(u)=[e^{(1)}_{-1,0},e_{-1,0}(u)]-e^{2}_{-1,0}(u)",
        "1",
        "e_-11(u) = [e_-10^(1), e_-10(u)] - e_-10(u)^2",
    ),
    _e(
        "gauss.e_first_mode_bracket",
        "relations",
        r"e_{-1,0}(u+\frac{1}{2})e_{-1,0}(u)-e_{-1,1}(u+\frac{1}{2})",
        "1",
        "[e_-10^(1), e_-10(u)] = e_-10(u)^2 - e_-10(u+1/2)e_-10(u) - e_-11(u+1/2)",
    ),
    _e(
        "gauss.e_m11_square",
        "relations",
        r"e_{-1,1}(u)=-\frac{1}{2}e^{2}_{-1,0}(u)",
        "1",
        "e_-11(u) = -e_-10(u)^2/2",
    ),
    _e(
        "gauss.f1_m1_square",
        "relations",
        r"f_{1,-1}(u)=-\frac{1}{2}f^{2}_{0,-1}(u)",
        "1",
        "f_1-1(u) = -f_0-1(u)^2/2; the literal f_10(u)^2 reading fails in every evaluation representation",
    ),
    # drinfeld
    _e("drinfeld.h_commute", "drinfeld", "[H(u),H(v)]=0", "(u-v)", "[H(u), H(v)] = 0"),
    _e(
        "drinfeld.xplus_xminus",
        "drinfeld",
        r"[X^{+}(u),X^{-}(v)]=-\frac{H(u)-H(v)}{u-v}",
        "(u-v)",
        "(u-v)[X+(u), X-(v)] = -(H(u) - H(v))",
    ),
    _e(
        "drinfeld.h_xplus",
        "drinfeld",
        r"[H(u),X^{+}(v)]=-\frac{1}{2}\frac{\{H(u),(X^{+}(u)-X^{+}(v))\}}{u-v}",
        "(u-v)",
        "2(u-v)[H(u), X+(v)] = -{H(u), X+(u) - X+(v)}",
    ),
    _e(
        "drinfeld.h_xminus",
        "drinfeld",
        r"[H(u),X^{-}(v)]=\frac{1}{2}\frac{\{H(u),(X^{-}(u)-X^{-}(v))\}}{u-v}",
        "(u-v)",
        "2(u-v)[H(u), X-(v)] = {H(u), X-(u) - X-(v)}",
    ),
    _e(
        "drinfeld.xplus_square",
        "drinfeld",
        r"[X^{+}(u),X^{+}(v)]=-\frac{1}{2}\frac{(X^{+}(u)-X^{+}(v))^2}{u-v}",
        "(u-v)",
        "2(u-v)[X+(u), X+(v)] = -(X+(u) - X+(v))^2",
    ),
    _e(
        "drinfeld.xminus_square",
        "drinfeld",
        r"[X^{-}(u),X^{-}(v)]=\frac{1}{2}\frac{(X^{-}_{i}(u)-X^{-}_{i}(v))^2}{u-v}",
        "(u-v)",
        "2(u-v)[X-(u), X-(v)] = (X-(u) - X-(v))^2",
    ),
    _e("drinfeld.modes_h_commute", "drinfeld", "[h_k,h_l]=0", "1", "[h_k, h_l] = 0"),
    _e("drinfeld.modes_x_bracket", "drinfeld", "[x^+_k,x^-_l]=h_{k+l}", "1", "[x+_k, x-_l] = h_{k+l}"),
    _e("drinfeld.modes_h0_x", "drinfeld", r"[h_0,x^{\pm}_l]=\pm x^{\pm}_{l}", "1", "[h_0, x±_l] = ±x±_l"),
    _e(
        "drinfeld.modes_h_x_recursion",
        "drinfeld",
        r"[h_{k+1},x^{\pm}_l]-[h_k,x^{\pm}_{l+1}]=\pm \frac{1}{2}\{h_k,x^{\pm}_{l}\}",
        "1",
        "[h_{k+1}, x±_l] - [h_k, x±_{l+1}] = ±{h_k, x±_l}/2",
    ),
    _e(
        "drinfeld.modes_x_recursion",
        "drinfeld",
        r"[x^{\pm}_{k+1},x^{\pm}_l]-[x^{\pm}_k,x^{\pm}_{l+1}]",
        "1",
        "[x±_{k+1}, x±_l] - [x±_k, x±_{l+1}] = ±{x±_k, x±_l}/2",
    ),
    _e(
        "drinfeld.inverse_map",
        "drinfeld",
        r"k_{-1}(u)\mapsto H^{-1}(u-\frac{1}{2})",
        "1",
        "k_-1(u)H(u-1/2) = 1",
    ),
    _e(
        "drinfeld.surjectivity",
        "drinfeld",
        "can generate the algebra",
        "1",
        "T(u) rebuilt from k_-1, e_-10 and f_0-1 alone",
    ),
    # roundtrip
    _e(
        "gauss.uniqueness",
        "roundtrip",
        "the following unique decomposition",
        "1",
        "decompose(reconstruct(G)) = G",
    ),
    _e(
        "drinfeld.mode_roundtrip",
        "roundtrip",
        r"X^{\pm}(u)=\sum_{k=0}^{\infty}x^{\pm}_ku^{-k-1}",
        "1",
        "currents resummed from their modes",
    ),
    _e(
        "drinfeld.full_roundtrip",
        "roundtrip",
        "is an isomorphism",
        "1",
        "T -> Gauss -> currents -> modes -> currents -> T reproduces T",
    ),
)

_BY_ID = {e.id: e for e in CATALOG}


def catalog_entry(identity: str) -> CatalogEntry:
    """
    Look up an identity.

    Raises:
        KeyError: If the identity is not in the catalog.
    """
    return _BY_ID[identity]


def suite_entries(suite: str) -> list[CatalogEntry]:
    return [e for e in CATALOG if e.suite == suite]


def format_catalog() -> str:
    """One line per identity: id, suite, clearing polynomial and anchor."""
    return "\n".join(e.line() for e in CATALOG) + "\n"
