#include "qlie/axioms.hpp"

#include <chrono>
#include <functional>

namespace qlie {

FreeElt op_s(const TLieStructure& s, int pos, const FreeElt& x) {
    return extend_bilinear(s.s_rule(), pos, x);
}
FreeElt op_bracket(const TLieStructure& s, int pos, const FreeElt& x) {
    return extend_bilinear(s.bracket_rule(), pos, x);
}
FreeElt op_pseudo(const TLieStructure& s, int pos, const FreeElt& x) {
    return extend_bilinear(s.pseudo_rule(), pos, x);
}

FreeElt elt_bracket(const TLieStructure& s, const FreeElt& a, const FreeElt& b) {
    FreeElt pair = a * b;
    if (pair.is_zero()) return pair;
    return op_bracket(s, 1, pair);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

FreeElt word3(const Gen& x, const Gen& y, const Gen& z) { return FreeElt(Word{x, y, z}); }

bool in_space(TripleSpace space, const Gen& x, const Gen& y, const Gen& z) {
    switch (space) {
        case TripleSpace::Ascending: return x < y && y < z;
        case TripleSpace::Descending: return z < y && y < x;
        default: return true;
    }
}

// Runs `residual` over every generator triple of the space; the report counts
// every enumerated instance and keeps the first nonzero residual.
AxiomReport check_over_triples(std::string id, const TLieStructure& s, TripleSpace space,
                               const std::function<FreeElt(const Gen&, const Gen&, const Gen&)>& residual) {
    auto t0 = Clock::now();
    AxiomReport rep;
    rep.axiom = std::move(id);
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens)
            for (const Gen& z : s.gens) {
                if (!in_space(space, x, y, z)) continue;
                ++rep.instances;
                FreeElt r = residual(x, y, z);
                if (!r.is_zero() && !rep.witness) {
                    rep.pass = false;
                    rep.witness = Witness{Word{x, y, z}.str(), render(r)};
                }
            }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

AxiomReport check_over_pairs(std::string id, const TLieStructure& s,
                             const std::function<FreeElt(const Gen&, const Gen&)>& residual) {
    auto t0 = Clock::now();
    AxiomReport rep;
    rep.axiom = std::move(id);
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            ++rep.instances;
            FreeElt r = residual(x, y);
            if (!r.is_zero() && !rep.witness) {
                rep.pass = false;
                rep.witness = Witness{Word{x, y}.str(), render(r)};
            }
        }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace

std::vector<AxiomReport> check_scalar_hypotheses(const TLieStructure& s) {
    std::vector<AxiomReport> out;
    out.push_back(check_over_pairs("hypotheses.presymmetry_involution", s,
                                   [&](const Gen& x, const Gen& y) {
                                       FreeElt xy(Word{x, y});
                                       return op_s(s, 1, op_s(s, 1, xy)) - xy;
                                   }));

    auto t0 = Clock::now();
    AxiomReport inv;
    inv.axiom = "hypotheses.swap_scalar_inverse";
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            ++inv.instances;
            QScalar prod = s.swap_scalar(x, y) * s.swap_scalar(y, x);
            if (!prod.is_one() && !inv.witness) {
                inv.pass = false;
                inv.witness = Witness{Word{x, y}.str(), prod.str()};
            }
        }
    inv.elapsed_ms = ms_since(t0);
    out.push_back(std::move(inv));
    return out;
}

std::vector<AxiomReport> check_antisymmetry(const TLieStructure& s) {
    std::vector<AxiomReport> out;
    out.push_back(check_over_pairs("antisymmetry.bracket", s, [&](const Gen& x, const Gen& y) {
        FreeElt xy(Word{x, y});
        return op_bracket(s, 1, op_s(s, 1, xy)) + op_bracket(s, 1, xy);
    }));
    out.push_back(check_over_pairs("antisymmetry.pseudobracket", s, [&](const Gen& x, const Gen& y) {
        FreeElt xy(Word{x, y});
        return op_pseudo(s, 1, op_s(s, 1, xy)) + op_pseudo(s, 1, xy);
    }));
    // Bracket applied to every pseudobracket output word must vanish.
    out.push_back(check_over_pairs("antisymmetry.bracket_of_pseudo", s, [&](const Gen& x, const Gen& y) {
        FreeElt p = op_pseudo(s, 1, FreeElt(Word{x, y}));
        return p.is_zero() ? p : op_bracket(s, 1, p);
    }));
    return out;
}

AxiomReport check_jacobi(const TLieStructure& s) {
    return check_over_triples("jacobi", s, TripleSpace::Full,
                              [&](const Gen& x, const Gen& y, const Gen& z) {
                                  FreeElt w = word3(x, y, z);
                                  return op_bracket(s, 1, op_bracket(s, 2, w)) -
                                         op_bracket(s, 1, op_bracket(s, 1, w)) -
                                         op_bracket(s, 1, op_bracket(s, 2, op_s(s, 1, w)));
                              });
}

std::vector<AxiomReport> check_second_jacobi(const TLieStructure& s) {
    std::vector<AxiomReport> out;
    out.push_back(check_over_triples(
        "jacobi_second.operator", s, TripleSpace::Descending,
        [&](const Gen& x, const Gen& y, const Gen& z) {
            FreeElt w = word3(x, y, z);
            return op_bracket(s, 1, op_bracket(s, 2, op_s(s, 1, op_s(s, 2, w)))) -
                   op_bracket(s, 1, op_bracket(s, 1, op_s(s, 2, op_s(s, 1, w)))) +
                   op_bracket(s, 1, op_bracket(s, 1, op_s(s, 2, w)));
        }));
    out.push_back(check_over_triples(
        "jacobi_second.scalar", s, TripleSpace::Descending,
        [&](const Gen& x, const Gen& y, const Gen& z) {
            FreeElt ex(Word{x}), ey(Word{y}), ez(Word{z});
            return elt_bracket(s, ex, elt_bracket(s, ey, ez)) -
                   elt_bracket(s, elt_bracket(s, ex, ey), ez) +
                   s.swap_scalar(y, z) * elt_bracket(s, elt_bracket(s, ex, ez), ey);
        }));
    return out;
}

namespace {

FreeElt mult_front_residual(const TLieStructure& s, const FreeElt& w) {
    return op_s(s, 1, op_bracket(s, 1, w)) - op_bracket(s, 2, op_s(s, 1, op_s(s, 2, w)));
}
FreeElt mult_back_residual(const TLieStructure& s, const FreeElt& w) {
    return op_s(s, 1, op_bracket(s, 2, w)) - op_bracket(s, 1, op_s(s, 2, op_s(s, 1, w)));
}

}  // namespace

std::vector<AxiomReport> check_multiplicativity(const TLieStructure& s, TripleSpace space) {
    const long long cube = static_cast<long long>(s.gen_count()) * s.gen_count() * s.gen_count();
    std::vector<AxiomReport> out;
    auto add = [&](const char* id, TripleSpace sub, auto&& residual) {
        AxiomReport rep = check_over_triples(id, s, sub, residual);
        if (space == TripleSpace::Full) rep.out_of_space = cube - 2 * rep.instances;
        out.push_back(std::move(rep));
    };
    if (space != TripleSpace::Descending) {
        add("multiplicativity.front.ascending", TripleSpace::Ascending,
            [&](const Gen& x, const Gen& y, const Gen& z) { return mult_front_residual(s, word3(x, y, z)); });
        add("multiplicativity.back.ascending", TripleSpace::Ascending,
            [&](const Gen& x, const Gen& y, const Gen& z) { return mult_back_residual(s, word3(x, y, z)); });
    }
    if (space != TripleSpace::Ascending) {
        add("multiplicativity.front.descending", TripleSpace::Descending,
            [&](const Gen& x, const Gen& y, const Gen& z) { return mult_front_residual(s, word3(x, y, z)); });
        add("multiplicativity.back.descending", TripleSpace::Descending,
            [&](const Gen& x, const Gen& y, const Gen& z) { return mult_back_residual(s, word3(x, y, z)); });
    }
    return out;
}

std::vector<AxiomReport> check_prejacobi_conditions(const TLieStructure& s) {
    std::vector<AxiomReport> out;
    out.push_back(check_over_triples(
        "prejacobi.front_descending", s, TripleSpace::Descending,
        [&](const Gen& x, const Gen& y, const Gen& z) { return mult_front_residual(s, word3(x, y, z)); }));
    out.push_back(check_over_triples(
        "prejacobi.back_descending", s, TripleSpace::Descending,
        [&](const Gen& x, const Gen& y, const Gen& z) { return mult_back_residual(s, word3(x, y, z)); }));
    out.push_back(check_over_pairs("prejacobi.equal_pair", s, [&](const Gen& x, const Gen& y) {
        FreeElt lhs_arg = s.bracket_entry(x, y) * FreeElt(Word{y});
        FreeElt lhs = lhs_arg.is_zero() ? lhs_arg : op_bracket(s, 1, op_s(s, 1, lhs_arg));
        FreeElt w = word3(x, y, y);
        FreeElt rhs = op_bracket(s, 1, op_bracket(s, 2, op_s(s, 1, op_s(s, 2, w))));
        return lhs - rhs;
    }));
    out.push_back(check_over_triples("balanced.left_jacobi", s, TripleSpace::Full,
                                     [&](const Gen& x, const Gen& y, const Gen& z) {
                                         FreeElt w = word3(x, y, z);
                                         return op_bracket(s, 1, op_bracket(s, 2, w)) -
                                                op_bracket(s, 1, op_bracket(s, 1, w)) -
                                                op_bracket(s, 1, op_bracket(s, 2, op_s(s, 1, w)));
                                     }));
    out.push_back(check_over_triples("balanced.right_jacobi", s, TripleSpace::Full,
                                     [&](const Gen& x, const Gen& y, const Gen& z) {
                                         FreeElt w = word3(x, y, z);
                                         return op_bracket(s, 1, op_bracket(s, 2, w)) -
                                                op_bracket(s, 1, op_bracket(s, 1, w)) +
                                                op_bracket(s, 1, op_bracket(s, 1, op_s(s, 2, w)));
                                     }));
    return out;
}

std::vector<AxiomReport> check_stability(const TLieStructure& s, FiltrationConvention convention) {
    std::vector<AxiomReport> out;

    auto t0 = Clock::now();
    AxiomReport grad;
    grad.axiom = "stability.gradation";
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            ++grad.instances;
            const FreeElt& br = s.bracket_entry(x, y);
            for (const auto& [w, c] : br.terms()) {
                if (w.size() != 1 || s.grading(w[0]) != s.grading(x) + s.grading(y) - 1) {
                    if (!grad.witness) {
                        grad.pass = false;
                        grad.witness = Witness{Word{x, y}.str(), render(br)};
                    }
                }
            }
        }
    grad.elapsed_ms = ms_since(t0);
    out.push_back(std::move(grad));

    t0 = Clock::now();
    AxiomReport filt;
    filt.axiom = std::string("stability.pseudo_filtration.") + to_string(convention);
    for (const Gen& x : s.gens)
        for (const Gen& y : s.gens) {
            ++filt.instances;
            const FreeElt& ps = s.pseudo_entry(x, y);
            const int bound = s.grading(x) + s.grading(y) - 1;
            for (const auto& [w, c] : ps.terms()) {
                bool ok = true;
                if (convention == FiltrationConvention::Sum) {
                    int total = 0;
                    for (const Gen& g : w.factors) total += s.grading(g);
                    ok = total <= bound;
                } else {
                    for (const Gen& g : w.factors) ok = ok && s.grading(g) <= bound;
                }
                if (!ok && !filt.witness) {
                    filt.pass = false;
                    int total = 0;
                    for (const Gen& g : w.factors) total += s.grading(g);
                    filt.witness = Witness{Word{x, y}.str(),
                                           "output word " + w.str() + " has degree " +
                                               std::to_string(total) + " > " + std::to_string(bound)};
                }
            }
        }
    filt.elapsed_ms = ms_since(t0);
    out.push_back(std::move(filt));
    return out;
}

std::vector<AxiomReport> check_descending_triples(const TLieStructure& s) {
    ClassicalOracle oracle{s.n};
    QPairRule classical{[&](const Gen& a, const Gen& b) { return oracle.bracket(a, b); }, false};
    std::vector<AxiomReport> out;
    // For a descending triple x > y > z, both double brackets of (z, x)
    // against y must vanish.
    out.push_back(check_over_triples("descending_triples.classical", s, TripleSpace::Descending,
                                     [&](const Gen& x, const Gen& y, const Gen& z) {
                                         FreeElt inner = oracle.bracket(z, x);
                                         FreeElt pair = inner * FreeElt(Word{y});
                                         return pair.is_zero() ? pair : extend_bilinear(classical, 1, pair);
                                     }));
    out.push_back(check_over_triples("descending_triples.deformed", s, TripleSpace::Descending,
                                     [&](const Gen& x, const Gen& y, const Gen& z) {
                                         return elt_bracket(s, s.bracket_entry(z, x), FreeElt(Word{y}));
                                     }));
    return out;
}

std::vector<AxiomReport> run_axiom_suite(const TLieStructure& s,
                                         const std::vector<FiltrationConvention>& conventions) {
    std::vector<AxiomReport> out;
    auto append = [&](std::vector<AxiomReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    append(check_scalar_hypotheses(s));
    append(check_antisymmetry(s));
    out.push_back(check_jacobi(s));
    append(check_second_jacobi(s));
    append(check_multiplicativity(s, TripleSpace::Ascending));
    append(check_multiplicativity(s, TripleSpace::Descending));
    append(check_prejacobi_conditions(s));
    append(check_descending_triples(s));
    bool first = true;
    for (FiltrationConvention conv : conventions) {
        auto v = check_stability(s, conv);
        if (!first) v.erase(v.begin());  // gradation part is convention independent
        first = false;
        append(std::move(v));
    }
    return out;
}

}  // namespace qlie
