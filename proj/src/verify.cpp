#include "qsymtab/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qsymtab/bijections.hpp"
#include "qsymtab/compositions.hpp"
#include "qsymtab/insertion_lr.hpp"
#include "qsymtab/qsym.hpp"
#include "qsymtab/tableaux.hpp"

namespace qsymtab::verify {

namespace {

// A small check context: collects the case count and the first failure.
struct Checker {
    long long cases = 0;
    bool passed = true;
    std::ostringstream detail;

    void check(bool ok, const std::function<void(std::ostream&)>& describe) {
        ++cases;
        if (ok || !passed) return;
        passed = false;
        describe(detail);
    }
    void check(bool ok, const std::string& message) {
        check(ok, [&](std::ostream& os) { os << message; });
    }
};

Filling make(Family family, std::vector<int> outer, std::vector<int> inner,
             std::vector<std::vector<int>> rows, bool standard = false) {
    return Filling({family, standard},
                   SkewShape(Composition(std::move(outer)), WeakComposition(std::move(inner))),
                   std::move(rows));
}

MonomialPoly poly_from_terms(int vars,
                             const std::vector<std::pair<std::vector<int>, Coeff>>& terms) {
    MonomialPoly p(vars);
    for (const auto& [exps, c] : terms) p.add(exps, c);
    return p;
}

MonomialPoly weight_sum(const std::vector<Filling>& fillings, int vars) {
    MonomialPoly out(vars);
    for (const Filling& f : fillings) {
        std::vector<int> exps(static_cast<size_t>(vars), 0);
        for (const auto& [v, m] : f.weight()) exps[static_cast<size_t>(v - 1)] = m;
        out.add(exps, 1);
    }
    return out;
}

// --- figure data ---

Filling fig2_tableau() {
    return make(Family::RowStrictSSYT, {4, 4, 3, 1}, {},
                {{1, 2, 3, 5}, {1, 2, 4, 5}, {2, 4, 5}, {2}});
}

Filling fig2_standardized() {
    return make(Family::RowStrictSSYT, {4, 4, 3, 1}, {},
                {{1, 3, 7, 10}, {2, 4, 8, 11}, {5, 9, 12}, {6}}, true);
}

Filling fig6_tableau() {
    return make(Family::RowStrictSSYT, {5, 4, 4, 1}, {},
                {{1, 2, 3, 4, 6}, {1, 3, 5, 6}, {2, 4, 5, 7}, {6}});
}

Filling fig6_rho() {
    return make(Family::SSYRT, {4, 5, 4, 1}, {},
                {{1, 4, 5, 7}, {1, 2, 3, 4, 6}, {2, 3, 5, 6}, {6}});
}

Filling fig9_standardized() {
    return make(Family::SSYRT, {4, 5, 4, 1}, {},
                {{1, 8, 10, 14}, {2, 3, 5, 7, 11}, {4, 6, 9, 12}, {13}}, true);
}

Filling fig10_tableau() {
    return make(Family::SSYRT, {3, 4, 1, 3}, {},
                {{1, 2, 4}, {1, 2, 3, 5}, {2}, {3, 4, 5}});
}

Filling fig10_result() {
    return make(Family::SSYRT, {3, 4, 1, 3, 1}, {},
                {{1, 2, 3}, {1, 2, 3, 5}, {2}, {3, 4, 5}, {4}});
}

Filling fig12_ssrct() {
    return make(Family::SSRCT, {3, 4, 3, 2}, {0, 2, 2, 1},
                {{4, 2, 1}, {4, 4}, {3}, {1}});
}

Filling fig12_phi() {
    return make(Family::SSRRT, {4, 1, 4, 3}, {0, 0, 3, 2},
                {{4, 3, 2, 1}, {4}, {4}, {1}});
}

Filling fig12_ssyct() {
    return make(Family::SSYCT, {2, 3, 4, 3}, {1, 2, 2, 0},
                {{4}, {2}, {1, 1}, {1, 3, 4}});
}

Filling fig12_phi_tilde() {
    return make(Family::SSYRT, {3, 4, 1, 4}, {2, 3, 0, 0},
                {{4}, {1}, {1}, {1, 2, 3, 4}});
}

Filling fig13_u() {
    return make(Family::SSYRT, {1, 2, 1, 3}, {}, {{1}, {1, 2}, {2}, {2, 3, 4}});
}

Filling fig13_s() {
    return make(Family::RowStrictSSYT, {4, 3, 2}, {},
                {{1, 2, 3, 5}, {2, 3, 4}, {2, 3}});
}

Filling fig13_v() {
    return make(Family::SSYRT, {3, 3, 5, 1, 1, 3}, {},
                {{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4, 5}, {2}, {2}, {2, 3, 4}});
}

Filling fig13_witness() {
    return make(Family::SSYRT, {3, 3, 5, 1, 1, 3}, {0, 1, 2, 0, 1, 3},
                {{1, 2, 3}, {1, 2}, {2, 3, 4}, {1}, {}, {}});
}

// --- suites ---

SuiteResult timed(const std::string& name, const std::function<void(Checker&)>& body) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    body(c);
    auto stop = std::chrono::steady_clock::now();
    return {name, c.passed, c.cases, c.detail.str(),
            std::chrono::duration<double>(stop - start).count()};
}

SuiteResult suite_fig5(int) {
    return timed("fig5", [](Checker& c) {
        SkewShape shape{Composition({1, 2, 1, 2})};
        auto fillings = enumerate_fillings({Family::SSYRT, false}, shape, 4);
        c.check(fillings.size() == 7, "expected exactly 7 SSYRT of shape (1,2,1,2) with entries <= 4");

        std::set<std::vector<std::vector<int>>> got;
        for (const Filling& f : fillings) got.insert(f.rows());
        std::set<std::vector<std::vector<int>>> expected = {
            {{1}, {1, 2}, {2}, {2, 3}}, {{1}, {1, 2}, {2}, {2, 4}},
            {{1}, {1, 2}, {2}, {3, 4}}, {{1}, {1, 2}, {3}, {3, 4}},
            {{1}, {1, 3}, {3}, {3, 4}}, {{1}, {2, 3}, {3}, {3, 4}},
            {{2}, {2, 3}, {3}, {3, 4}}};
        c.check(got == expected, "enumerated fillings differ from the displayed seven");

        MonomialPoly displayed = poly_from_terms(
            4, {{{2, 3, 1, 0}, 1}, {{2, 3, 0, 1}, 1}, {{2, 2, 1, 1}, 1}, {{2, 1, 2, 1}, 1},
                {{2, 0, 3, 1}, 1}, {{1, 1, 3, 1}, 1}, {{0, 2, 3, 1}, 1}});
        MonomialPoly via_f = to_monomials(expand_in_F(Basis::R, Composition({1, 2, 1, 2})), 4);
        c.check(via_f == displayed, [&](std::ostream& os) {
            os << "R(1,2,1,2) in 4 variables: got " << via_f.str();
        });
        c.check(weight_sum(fillings, 4) == displayed, "direct weight sum disagrees");
    });
}

SuiteResult suite_fig8(int) {
    return timed("fig8", [](Checker& c) {
        QSymExpr expansion = expand_in_F(Basis::R, Composition({2, 3}));
        QSymExpr expected(Basis::F);
        expected.add(Composition({2, 2, 1}), 1);
        expected.add(Composition({2, 1, 2}), 1);
        expected.add(Composition({1, 2, 1, 1}), 1);
        c.check(expansion == expected,
                "R(2,3) = " + expansion.str() + ", expected " + expected.str());

        auto standards = enumerate_standard({Family::SSYRT, true}, SkewShape(Composition({2, 3})));
        c.check(standards.size() == 3, "expected 3 standard SSYRT of shape (2,3)");
        std::map<std::vector<std::vector<int>>, std::set<int>> expect_descents = {
            {{{1, 4}, {2, 3, 5}}, {2, 4}},
            {{{1, 5}, {2, 3, 4}}, {2, 3}},
            {{{1, 2}, {3, 4, 5}}, {1, 3, 4}}};
        for (const Filling& t : standards) {
            auto it = expect_descents.find(t.rows());
            c.check(it != expect_descents.end(), [&](std::ostream& os) {
                os << "unexpected standard tableau\n" << render(t);
            });
            if (it != expect_descents.end())
                c.check(descent_data(t).reverse_descents == it->second,
                        [&](std::ostream& os) {
                            os << "descent set mismatch for\n" << render(t);
                        });
        }
    });
}

SuiteResult suite_figures_std(int) {
    return timed("figures-std", [](Checker& c) {
        c.check(standardize(fig2_tableau()) == fig2_standardized(),
                "standardization of the row-strict tableau differs from the figure");
        c.check(rho(fig6_tableau()) == fig6_rho().with_kind({Family::SSYRT, false}),
                "rho image differs from the figure");
        c.check(rho_inverse(fig6_rho()) == fig6_tableau().with_kind({Family::RowStrictSSYT, false}),
                "rho inverse does not recover the figure");

        std::vector<int> word = reading_word(fig6_rho(), ReadingOrder::Standard);
        std::vector<int> expected_word = {6, 6, 4, 7, 5, 3, 5, 3, 2, 4, 1, 1, 2, 6};
        c.check(word == expected_word, [&](std::ostream& os) {
            os << "reading word:";
            for (int v : word) os << ' ' << v;
        });
        c.check(standardize(fig6_rho()) == fig9_standardized(),
                "standardization of the SSYRT differs from the figure");
    });
}

SuiteResult suite_fig10(int) {
    return timed("fig10", [](Checker& c) {
        InsertionResult r = insert(fig10_tableau(), 3);
        c.check(r.tableau == fig10_result(), [&](std::ostream& os) {
            os << "insertion result:\n" << render(r.tableau);
        });
        std::vector<Cell> expected_path = {{2, 3}, {1, 3}, {4, 2}, {5, 1}};
        c.check(r.bump_path == expected_path, [&](std::ostream& os) {
            os << "bump path:";
            for (auto [row, col] : r.bump_path) os << " (" << row << "," << col << ")";
        });
        c.check(r.new_cell == Cell{5, 1}, "new cell mismatch");
    });
}

SuiteResult suite_schur_sum(int max_n) {
    if (max_n < 0) max_n = 6;
    return timed("schur-sum", [max_n](Checker& c) {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                SchurSumCheck check = schur_sums(lambda, n);
                c.check(check.equal(), [&](std::ostream& os) {
                    os << "s" << lambda.str() << " != sum of R over shape " << lambda.conjugate().str();
                });
            }
    });
}

SuiteResult suite_zbasis(int max_n) {
    if (max_n < 0) max_n = 7;
    return timed("zbasis", [max_n](Checker& c) {
        for (int n = 1; n <= max_n; ++n) {
            const TransitionMatrix& t = transition_matrix_R_to_F(n);
            c.check(t.upper_unitriangular(), [&](std::ostream& os) {
                os << "R-to-F matrix for n = " << n << " is not upper uni-triangular";
            });
            c.check(t.row_order.size() == (n == 0 ? 1u : (1u << (n - 1))),
                    "matrix dimension mismatch");
        }
    });
}

SuiteResult suite_skew_routes(int max_n) {
    if (max_n < 0) max_n = 6;
    return timed("skew-routes", [max_n](Checker& c) {
        for (int n = 1; n <= max_n; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (int k = 0; k <= n; ++k)
                    for (const Composition& beta : compositions_of(k)) {
                        if (!contains(beta, alpha)) continue;
                        QSymExpr comb = skew_R(alpha, beta, SkewRoute::Combinatorial);
                        QSymExpr hopf = skew_R(alpha, beta, SkewRoute::Hopf);
                        c.check(comb == hopf, [&](std::ostream& os) {
                            os << "skew routes disagree for " << alpha.str() << "//" << beta.str()
                               << ": combinatorial " << comb.str() << ", hopf " << hopf.str();
                        });
                    }
    });
}

SuiteResult suite_restrict_glue(int max_n) {
    if (max_n < 0) max_n = 6;
    return timed("restrict-glue", [max_n](Checker& c) {
        for (int n = 1; n <= max_n; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (const Filling& t : enumerate_standard({Family::SSYRT, true},
                                                           SkewShape(alpha))) {
                    DescentData d = descent_data(t);
                    for (int i = 0; i <= n; ++i) {
                        Restriction r = restrict(t, i);
                        c.check(glue(r.lower, r.upper) == t, [&](std::ostream& os) {
                            os << "restrict/glue round trip failed at i = " << i << " for\n"
                               << render(t);
                        });
                        Composition lower_comp = descent_data(r.lower).comp_reverse;
                        Composition upper_comp = descent_data(r.upper).comp_reverse;
                        Composition combined = d.reverse_descents.count(i)
                                                   ? concat(lower_comp, upper_comp)
                                                   : near_concat(lower_comp, upper_comp);
                        c.check(combined == d.comp_reverse, [&](std::ostream& os) {
                            os << "descent composition law failed at i = " << i << " for\n"
                               << render(t);
                        });
                    }
                }
    });
}

SuiteResult suite_omega(int max_n) {
    if (max_n < 0) max_n = 6;
    return timed("omega", [max_n](Checker& c) {
        for (int n = 1; n <= max_n; ++n)
            for (const Composition& alpha : compositions_of(n)) {
                MonomialPoly lhs = to_monomials(omega(expand_in_F(Basis::S, alpha)), n);
                MonomialPoly rhs =
                    reverse_variables(to_monomials(expand_in_F(Basis::R, alpha), n));
                c.check(lhs == rhs, [&](std::ostream& os) {
                    os << "omega(S" << alpha.str() << ") != reversed R" << alpha.str();
                });
            }
    });
}

SuiteResult suite_lr(int max_n) {
    const int max_alpha = max_n < 0 ? 3 : std::min(max_n, 3);
    const int max_lambda = max_n < 0 ? 3 : std::min(max_n, 3);
    return timed("lr", [max_alpha, max_lambda](Checker& c) {
        // Theorem 5.5: the rule matches the product decomposition
        for (int a = 0; a <= max_alpha; ++a)
            for (const Composition& alpha : compositions_of(a))
                for (int l = 0; l <= max_lambda; ++l)
                    for (const Partition& lambda : partitions_of(l)) {
                        std::map<Composition, Coeff> rule = lr_coefficients(alpha, lambda);
                        QSymExpr product = product_and_decompose(
                            QSymExpr::term(Basis::R, alpha), SymExpr::term(lambda));
                        c.check(product.terms() == rule, [&](std::ostream& os) {
                            os << "LR rule disagrees with the product for R" << alpha.str()
                               << " * s" << lambda.str();
                        });
                    }
        // Lemma 5.6: f intertwines the two insertion algorithms
        for (int n = 1; n <= 5; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (const Filling& t :
                     enumerate_fillings({Family::SSRRT, false}, SkewShape(alpha), n))
                    for (int x = 1; x <= n; ++x) {
                        Filling lhs = f_map(insert(t, x).tableau, n);
                        Filling rhs = insert(f_map(t, n), n - x + 1).tableau;
                        c.check(lhs == rhs, [&](std::ostream& os) {
                            os << "insertion does not commute with f for x = " << x << " and\n"
                               << render(t);
                        });
                    }
        // Lemma 5.7: f carries reverse witnesses to lattice witnesses
        for (int a = 0; a <= 3; ++a)
            for (const Composition& alpha : compositions_of(a))
                for (int l = 0; l <= 6 - a; ++l)
                    for (const Partition& lambda : partitions_of(l))
                        for (const Composition& beta : compositions_of(a + l)) {
                            auto reverse = enumerate_reverse_lr(alpha, lambda, beta);
                            auto forward =
                                enumerate_lr(alpha.reversed(), lambda, beta.reversed());
                            c.check(reverse.size() == forward.size(),
                                    [&](std::ostream& os) {
                                        os << "witness counts differ for alpha " << alpha.str()
                                           << ", lambda " << lambda.str() << ", beta "
                                           << beta.str();
                                    });
                            for (const LRWitness& w : reverse) {
                                Filling image = f_map(w.filling, lambda.length());
                                c.check(is_lr_skew_ssyrt(image), [&](std::ostream& os) {
                                    os << "f image fails the LR rule:\n" << render(w.filling);
                                });
                            }
                        }
    });
}

SuiteResult suite_skew_schur(int max_n) {
    const int size_bound = max_n < 0 ? 5 : max_n;
    return timed("skew-schur", [size_bound](Checker& c) {
        const int k = 4;
        // weight equality through h on all small skew shapes
        for (int n = 1; n <= 6; ++n)
            for (const Partition& lambda : partitions_of(n))
                for (int m = 0; m < n; ++m)
                    for (const Partition& mu : partitions_of(m)) {
                        if (!partition_contains(mu, lambda)) continue;
                        if (lambda.weight() - mu.weight() > size_bound) continue;
                        auto ssyt = enumerate_fillings(
                            {Family::SSYT, false},
                            SkewShape(lambda.conjugate().as_composition(),
                                      WeakComposition(mu.conjugate().parts())),
                            k);
                        MonomialPoly lhs = weight_sum(ssyt, k);
                        MonomialPoly rhs(k);
                        std::set<SkewShape> shapes;
                        for (const SkewShape& shape : skew_rearrangements(lambda, mu)) {
                            shapes.insert(shape);
                            rhs += weight_sum(
                                enumerate_fillings({Family::SSYRT, false}, shape, k), k);
                        }
                        c.check(lhs == rhs, [&](std::ostream& os) {
                            os << "weight sums differ for " << lambda.str() << "/" << mu.str();
                        });
                        // h is a weight-preserving injection into the class
                        std::set<Filling> images;
                        for (const Filling& s : ssyt) {
                            Filling u = h_map(s);
                            c.check(validate(u).ok && u.weight() == s.weight() &&
                                        shapes.count(u.shape()) && h_inverse(u) == s &&
                                        !images.count(u),
                                    [&](std::ostream& os) {
                                        os << "h failed on\n" << render(s);
                                    });
                            images.insert(u);
                        }
                    }
        // the phi-tilde identity: sums of S over a shape class equal sums
        // of R over the conjugate class
        for (int n = 1; n <= 5; ++n)
            for (const Partition& lambda : partitions_of(n)) {
                MonomialPoly s_side(n), r_side(n);
                long long s_count = 0, r_count = 0;
                std::set<Filling> images;
                bool phi_ok = true;
                for (const Composition& alpha : compositions_of(n)) {
                    if (shape_of(alpha) == lambda) {
                        s_side += to_monomials(expand_in_F(Basis::S, alpha), n);
                        for (const Filling& u : enumerate_fillings({Family::SSYCT, false},
                                                                   SkewShape(alpha), n)) {
                            ++s_count;
                            Filling image = phi_tilde(u);
                            phi_ok = phi_ok && validate(image).ok &&
                                     image.weight() == u.weight() &&
                                     shape_of(image.shape().outer()) == lambda.conjugate() &&
                                     !images.count(image);
                            images.insert(image);
                        }
                    }
                    if (shape_of(alpha) == lambda.conjugate()) {
                        r_side += to_monomials(expand_in_F(Basis::R, alpha), n);
                        r_count += static_cast<long long>(
                            enumerate_fillings({Family::SSYRT, false}, SkewShape(alpha), n)
                                .size());
                    }
                }
                c.check(s_side == r_side, [&](std::ostream& os) {
                    os << "sum of S over shape " << lambda.str()
                       << " differs from the R sum over the conjugate";
                });
                c.check(phi_ok && s_count == r_count,
                        "phi-tilde is not a weight-preserving bijection for shape " +
                            lambda.str());
            }
        // the Fig. 11 instance
        Partition lambda({4, 4, 3, 1}), mu({3, 2});
        Filling s = make(Family::SSYT, {4, 3, 3, 2}, {2, 2, 1, 0},
                         {{1, 1}, {2}, {3, 4}, {1, 4}});
        c.check(validate(s).ok, "the Fig. 11 tableau is not a valid skew SSYT");
        c.check(h_map(s) == fig12_phi_tilde().with_kind({Family::SSYRT, false}),
                "h image of the Fig. 11 tableau differs from the figure");
        MonomialPoly lhs = skew_schur_to_monomials(lambda.conjugate(), mu.conjugate(), k);
        MonomialPoly rhs(k);
        for (const SkewShape& shape : skew_rearrangements(lambda, mu))
            rhs += weight_sum(enumerate_fillings({Family::SSYRT, false}, shape, k), k);
        c.check(lhs == rhs, "weight sums differ for the Fig. 11 shapes");
    });
}

SuiteResult suite_commute(int max_n) {
    const int rho_bound = max_n < 0 ? 6 : max_n;
    const int phi_bound = max_n < 0 ? 5 : std::min(max_n, 5);
    return timed("commute", [rho_bound, phi_bound](Checker& c) {
        // rho commutes with standardization
        for (int n = 1; n <= rho_bound; ++n)
            for (const Partition& lambda : partitions_of(n))
                for (const Filling& t :
                     enumerate_fillings({Family::RowStrictSSYT, false},
                                        SkewShape(lambda.as_composition()), n)) {
                    c.check(standardize(rho(t)) == rho(standardize(t)),
                            [&](std::ostream& os) {
                                os << "rho does not commute with standardization for\n"
                                   << render(t);
                            });
                }
        // f conjugates phi into phi-tilde
        for (int n = 1; n <= phi_bound; ++n)
            for (const Composition& alpha : compositions_of(n))
                for (const Filling& t :
                     enumerate_fillings({Family::SSRCT, false}, SkewShape(alpha), n)) {
                    c.check(f_map(phi(t), n) == phi_tilde(f_map(t, n)),
                            [&](std::ostream& os) {
                                os << "f(phi(T)) != phi-tilde(f(T)) for\n" << render(t);
                            });
                }
        // the Fig. 12 instance, verbatim
        Filling t12 = fig12_ssrct();
        c.check(phi(t12) == fig12_phi(), [&](std::ostream& os) {
            os << "phi of the Fig. 12 tableau:\n" << render(phi(t12));
        });
        c.check(f_map(t12, 4) == fig12_ssyct(), "f image of the Fig. 12 SSRCT differs");
        c.check(phi_tilde(fig12_ssyct()) == fig12_phi_tilde(), [&](std::ostream& os) {
            os << "phi-tilde of the Fig. 12 tableau:\n" << render(phi_tilde(fig12_ssyct()));
        });
        c.check(f_map(phi(t12), 4) == phi_tilde(f_map(t12, 4)),
                "the Fig. 12 square does not commute");
    });
}

SuiteResult suite_fig13(int) {
    return timed("fig13", [](Checker& c) {
        DoubleWordResult r = double_word_insertion(fig13_u(), fig13_s());
        std::vector<int> top = {1, 1, 1, 2, 2, 2, 3, 3, 4};
        std::vector<int> bottom = {2, 2, 1, 3, 3, 2, 4, 3, 5};
        c.check(r.top_word == top && r.bottom_word == bottom, "double word differs");
        c.check(r.v == fig13_v(), [&](std::ostream& os) {
            os << "insertion tableau:\n" << render(r.v);
        });
        c.check(r.witness.filling == fig13_witness(), [&](std::ostream& os) {
            os << "star tableau:\n" << render(r.witness.filling);
        });
        c.check(is_lr_skew_ssyrt(r.witness.filling), "the star tableau fails the LR rule");
        c.check(r.witness.content == Partition({3, 3, 2, 1}), "witness content mismatch");
        // the displayed outer shape carries a positive coefficient
        c.check(lr_count(Composition({1, 2, 1, 3}), Partition({3, 3, 2, 1}),
                         Composition({3, 3, 5, 1, 1, 3})) >= 1,
                "the Fig. 13 outer shape has coefficient zero");
    });
}

using SuiteFn = SuiteResult (*)(int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"fig5", suite_fig5},
        {"fig8", suite_fig8},
        {"figures-std", suite_figures_std},
        {"fig10", suite_fig10},
        {"schur-sum", suite_schur_sum},
        {"zbasis", suite_zbasis},
        {"skew-routes", suite_skew_routes},
        {"restrict-glue", suite_restrict_glue},
        {"omega", suite_omega},
        {"lr", suite_lr},
        {"skew-schur", suite_skew_schur},
        {"commute", suite_commute},
        {"fig13", suite_fig13},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, int max_n) {
    for (const auto& [suite, fn] : registry())
        if (suite == name) return fn(max_n);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<SuiteResult> run_all(int max_n) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn(max_n));
    return out;
}

}  // namespace qsymtab::verify
