#include "superquant/harmonic.hpp"

#include <sstream>

namespace superquant {

std::string Label::str() const {
    std::ostringstream os;
    os << "(" << k << "," << kappa << "," << s << ";" << alpha << beta << ")";
    return os.str();
}

Harmonic::Harmonic(const Chart& ch)
    : chart_(ch),
      op_T_(invariant_generator(Gen::T, ch)),
      op_del_(invariant_generator(Gen::Del, ch)),
      op_qstar_(invariant_generator(Gen::QStar, ch)),
      op_q_(invariant_generator(Gen::Q, ch)),
      op_delstar_(invariant_generator(Gen::DelStar, ch)),
      op_R_(invariant_generator(Gen::R, ch)) {}

namespace {

std::vector<Scalar> to_coords(const SuperPoly& f, const std::vector<Mono>& basis) {
    std::vector<Scalar> v(basis.size(), Scalar::zero());
    for (const auto& [m, c] : f.terms()) v[fiber_index(basis, m)] = c;
    return v;
}

SuperPoly from_coords(const Chart& ch, const std::vector<Scalar>& v,
                      const std::vector<Mono>& basis) {
    SuperPoly f(ch);
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) f.add_term(basis[i], v[i]);
    return f;
}

}  // namespace

std::vector<SuperPoly> Harmonic::seed_basis(int k, int kappa) {
    std::vector<SuperPoly> out;
    if (k < 0 || kappa < 0 || kappa > chart_.n) return out;
    auto basis = fiber_basis(chart_, k, kappa);
    if (basis.empty()) return out;

    auto bT = fiber_basis(chart_, k - 2, kappa);
    auto bDel = fiber_basis(chart_, k - 1, kappa + 1);
    auto bQs = fiber_basis(chart_, k - 1, kappa - 1);
    size_t rows = bT.size() + bDel.size() + bQs.size();
    if (rows == 0) {
        for (const auto& m : basis) out.push_back(SuperPoly::monomial(chart_, m, Scalar::one()));
        return out;
    }
    ScalarMat mat(rows, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        SuperPoly v = SuperPoly::monomial(chart_, basis[j], Scalar::one());
        SuperPoly tv = op_T_.apply(v), dv = op_del_.apply(v), qv = op_qstar_.apply(v);
        for (const auto& [m, c] : tv.terms()) mat.at(fiber_index(bT, m), j) = c;
        for (const auto& [m, c] : dv.terms()) mat.at(bT.size() + fiber_index(bDel, m), j) = c;
        for (const auto& [m, c] : qv.terms())
            mat.at(bT.size() + bDel.size() + fiber_index(bQs, m), j) = c;
    }
    for (const auto& kv : kernel_basis(mat)) out.push_back(from_coords(chart_, kv, basis));
    return out;
}

SuperPoly Harmonic::pi0(const SuperPoly& f) {
    SuperPoly out(chart_);
    for (const auto& [bideg, part] : f.bigrade()) {
        auto [k, kappa] = bideg;
        SuperPoly tp = op_T_.apply(part);
        if (tp.is_zero()) {
            out += part;
            continue;
        }
        SuperPoly t2 = op_T_.apply(tp);
        if (!t2.is_zero())
            throw Error("pi0 applied outside ker T^2 at bidegree (" + std::to_string(k) + "," +
                        std::to_string(kappa) + ")");
        // T [R, .] on ker T forces this coefficient; with it T(pi0 u) = 0.
        Rat denom(2 * (chart_.n + 2 * (k - 2)));
        SuperPoly res = part - op_R_.apply(tp) * Scalar(Rat(1) / denom);
        if (!op_T_.apply(res).is_zero())
            throw Error("pi0 post-condition failed at bidegree (" + std::to_string(k) + "," +
                        std::to_string(kappa) + ")");
        out += res;
    }
    return out;
}

SuperPoly Harmonic::q0(const SuperPoly& f) { return pi0(op_q_.apply(f)); }

const Harmonic::BidegreeData& Harmonic::bidegree(int k, int kappa) {
    auto key = std::make_pair(k, kappa);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    BidegreeData data;
    data.basis = fiber_basis(chart_, k, kappa);
    std::vector<std::vector<Scalar>> columns;
    auto col_rank = [&]() {
        ScalarMat m(data.basis.size(), columns.size());
        for (size_t j = 0; j < columns.size(); ++j)
            for (size_t i = 0; i < data.basis.size(); ++i) m.at(i, j) = columns[j][i];
        return rank(m);
    };
    size_t rank_so_far = 0;
    for (int s = 0; 2 * s <= k; ++s) {
        for (int alpha = 0; alpha <= 1; ++alpha) {
            for (int beta = 0; beta <= 1; ++beta) {
                Label l{k, kappa, s, alpha, beta};
                if (l.seed_k() < 0 || l.seed_kappa() < 0 || l.seed_kappa() > chart_.n) continue;
                auto seeds = seed_basis(l.seed_k(), l.seed_kappa());
                if (seeds.empty()) continue;
                size_t col0 = columns.size();
                size_t dead = 0;
                for (const auto& w : seeds) {
                    SuperPoly v = w;
                    if (beta) v = op_delstar_.apply(v);
                    if (alpha) v = q0(v);
                    for (int t = 0; t < l.s; ++t) v = op_R_.apply(v);
                    if (v.is_zero()) {
                        ++dead;
                        continue;
                    }
                    columns.push_back(to_coords(v, data.basis));
                }
                if (dead == seeds.size()) continue;  // constructor kills the whole seed space
                if (dead != 0)
                    throw Error("component constructor is neither injective nor zero at " +
                                l.str());
                // At kappa = n two label families can alias the same
                // subspace (Q del* equals R on the top form); keep the
                // first one encountered and drop exact duplicates.
                size_t new_rank = col_rank();
                if (new_rank == rank_so_far) {
                    columns.resize(col0);
                    continue;
                }
                if (new_rank != rank_so_far + (columns.size() - col0))
                    throw Error("partially dependent component columns at " + l.str());
                rank_so_far = new_rank;
                data.labels.push_back(l);
                data.col_range.emplace_back(col0, columns.size());
            }
        }
    }
    if (columns.size() != data.basis.size())
        throw Error("harmonic decomposition incomplete at bidegree (" + std::to_string(k) + "," +
                    std::to_string(kappa) + "): " + std::to_string(columns.size()) + " vs " +
                    std::to_string(data.basis.size()));
    data.change = ScalarMat(data.basis.size(), columns.size());
    data.cols.resize(columns.size());
    for (size_t j = 0; j < columns.size(); ++j)
        for (size_t i = 0; i < data.basis.size(); ++i) {
            data.change.at(i, j) = columns[j][i];
            if (!columns[j][i].is_zero()) data.cols[j].emplace_back(i, columns[j][i]);
        }
    data.change_inv = invert(data.change);
    return cache_.emplace(key, std::move(data)).first->second;
}

std::vector<SuperPoly> Harmonic::component_basis(const Label& l) {
    if (l.k < 0 || l.kappa < 0 || l.kappa > chart_.n) return {};
    const auto& data = bidegree(l.k, l.kappa);
    std::vector<SuperPoly> out;
    for (size_t li = 0; li < data.labels.size(); ++li) {
        if (!(data.labels[li] == l)) continue;
        auto [c0, c1] = data.col_range[li];
        for (size_t j = c0; j < c1; ++j) {
            std::vector<Scalar> col(data.basis.size());
            for (size_t i = 0; i < data.basis.size(); ++i) col[i] = data.change.at(i, j);
            out.push_back(from_coords(chart_, col, data.basis));
        }
    }
    return out;
}

bool Harmonic::realizable(const Label& l) { return !component_basis(l).empty(); }

std::map<Label, SuperPoly> Harmonic::decompose(const SuperPoly& f) {
    std::map<Label, SuperPoly> out;
    // split off x-monomials; the fiber decomposition is x-linear
    std::map<ExpVec, SuperPoly> by_x;
    for (const auto& [m, c] : f.terms()) {
        Mono fib = m;
        fib.x = zero_exp();
        auto it = by_x.find(m.x);
        if (it == by_x.end()) it = by_x.emplace(m.x, SuperPoly(chart_)).first;
        it->second.add_term(fib, c);
    }
    for (const auto& [xexp, fiber_poly] : by_x) {
        for (const auto& [bideg, part] : fiber_poly.bigrade()) {
            const auto& data = bidegree(bideg.first, bideg.second);
            auto coords = data.change_inv.apply(to_coords(part, data.basis));
            for (size_t li = 0; li < data.labels.size(); ++li) {
                auto [c0, c1] = data.col_range[li];
                SuperPoly comp(chart_);
                for (size_t j = c0; j < c1; ++j) {
                    if (coords[j].is_zero()) continue;
                    for (const auto& [i, cij] : data.cols[j]) {
                        Mono m = data.basis[i];
                        m.x = xexp;
                        comp.add_term(m, coords[j] * cij);
                    }
                }
                if (comp.is_zero()) continue;
                auto it = out.find(data.labels[li]);
                if (it == out.end())
                    out.emplace(data.labels[li], comp);
                else
                    it->second += comp;
            }
        }
    }
    return out;
}

namespace {
SuperPoly project_labels(Harmonic& h, const SuperPoly& f,
                         const std::function<bool(const Label&)>& keep) {
    // per-x-block, per-bidegree: one matvec with the cached inverse, then
    // re-assemble only the kept columns
    const Chart& ch = h.chart();
    SuperPoly out(ch);
    std::map<ExpVec, SuperPoly> by_x;
    for (const auto& [m, c] : f.terms()) {
        Mono fib = m;
        fib.x = zero_exp();
        auto it = by_x.find(m.x);
        if (it == by_x.end()) it = by_x.emplace(m.x, SuperPoly(ch)).first;
        it->second.add_term(fib, c);
    }
    for (auto& [xexp, fiber_poly] : by_x) {
        for (const auto& [bideg, part] : fiber_poly.bigrade()) {
            const auto& data = h.bidegree(bideg.first, bideg.second);
            auto coords = data.change_inv.apply(to_coords(part, data.basis));
            for (size_t li = 0; li < data.labels.size(); ++li) {
                if (!keep(data.labels[li])) continue;
                auto [c0, c1] = data.col_range[li];
                for (size_t j = c0; j < c1; ++j) {
                    if (coords[j].is_zero()) continue;
                    for (const auto& [i, cij] : data.cols[j]) {
                        Mono m = data.basis[i];
                        m.x = xexp;
                        out.add_term(m, coords[j] * cij);
                    }
                }
            }
        }
    }
    return out;
}
}  // namespace

SuperPoly Harmonic::project_seed(const SuperPoly& f) {
    return project_labels(*this, f,
                          [](const Label& l) { return l.s == 0 && l.alpha == 0 && l.beta == 0; });
}

SuperPoly Harmonic::project_01(const SuperPoly& f) {
    return project_labels(*this, f,
                          [](const Label& l) { return l.s == 0 && l.alpha == 0 && l.beta == 1; });
}

SuperPoly Harmonic::bold0(const PolyOp& op, const SuperPoly& f) {
    return project_seed(op.apply(project_seed(f)));
}

PolyOp projection_op(ProjName name, int k, int kappa, Harmonic& h) {
    const Chart& ch = h.chart();
    auto scalar_from = [&](long num, long den_val, const char* what) {
        if (den_val == 0)
            throw DegenerateDenominatorError(std::string(what) + " denominator vanishes at (" +
                                             std::to_string(k) + "," + std::to_string(kappa) +
                                             ")");
        return Scalar(frac(num, den_val));
    };
    switch (name) {
        case ProjName::DeltaPair:
            return compose(invariant_generator(Gen::Del, ch),
                           invariant_generator(Gen::DelStar, ch)) *
                   scalar_from(1, k + kappa, "E+Sigma");
        case ProjName::DeltaPairComplement:
            return compose(invariant_generator(Gen::DelStar, ch),
                           invariant_generator(Gen::Del, ch)) *
                   scalar_from(1, k + kappa, "E+Sigma");
        case ProjName::QPair:
            return compose(invariant_generator(Gen::QStar, ch),
                           invariant_generator(Gen::Q, ch)) *
                   scalar_from(1, ch.n + k - kappa, "n+E-Sigma");
        case ProjName::QPairComplement:
            return compose(invariant_generator(Gen::Q, ch),
                           invariant_generator(Gen::QStar, ch)) *
                   scalar_from(1, ch.n + k - kappa, "n+E-Sigma");
        case ProjName::Pi0: {
            PolyOp rt = compose(invariant_generator(Gen::R, ch), invariant_generator(Gen::T, ch));
            return PolyOp::identity(ch) -
                   rt * scalar_from(1, 2 * (ch.n + 2 * (k - 2)), "2(n+2(E-2))");
        }
        case ProjName::PiBold0:
        case ProjName::Pi01: {
            // matrix-encoded fiberwise projector, valid on this bidegree only
            const auto& data = h.bidegree(k, kappa);
            ScalarMat sel(data.change.cols(), data.change.cols());
            for (size_t li = 0; li < data.labels.size(); ++li) {
                const Label& l = data.labels[li];
                bool keep =
                    l.s == 0 && l.alpha == 0 && l.beta == (name == ProjName::Pi01 ? 1 : 0);
                if (!keep) continue;
                auto [c0, c1] = data.col_range[li];
                for (size_t j = c0; j < c1; ++j) sel.at(j, j) = Scalar::one();
            }
            ScalarMat proj = data.change * sel * data.change_inv;
            PolyOp out(ch);
            for (size_t j = 0; j < data.basis.size(); ++j) {
                const Mono& in = data.basis[j];
                SuperPoly probe = SuperPoly::monomial(ch, in, Scalar::one());
                OpMono dual;
                dual.dp = in.p;
                dual.dxi = in.xi;
                PolyOp dword = PolyOp::term(ch, dual, Scalar::one());
                Scalar norm = dword.apply(probe).coeff(Mono{});
                for (size_t i = 0; i < data.basis.size(); ++i) {
                    if (proj.at(i, j).is_zero()) continue;
                    OpMono w;
                    w.p = data.basis[i].p;
                    w.xi = data.basis[i].xi;
                    w.dp = in.p;
                    w.dxi = in.xi;
                    out.add_term(w, proj.at(i, j) / norm);
                }
            }
            return out;
        }
    }
    throw Error("unknown projection");
}

PolyOp casimir_defining_sum(const std::function<PolyOp(const ConfGen&)>& rho, const Chart& ch) {
    PolyOp c(ch);
    const Scalar half(Rat(1, 2));
    auto rot = [&](int i, int j) {
        if (i < j) return rho({ConfGen::Rotation, i, j});
        return -rho({ConfGen::Rotation, j, i});
    };
    for (int i = 0; i < ch.n; ++i)
        for (int j = 0; j < ch.n; ++j) {
            if (i == j) continue;
            PolyOp rij = rot(i, j);
            Scalar w = half * Scalar(ch.eta(i) * ch.eta(j));
            c += compose(rij, rij) * w;
        }
    PolyOp dil = rho({ConfGen::Dilation, 0, 0});
    c -= compose(dil, dil);
    for (int i = 0; i < ch.n; ++i) {
        PolyOp tr = rho({ConfGen::Translation, i, 0});
        PolyOp inv = rho({ConfGen::Inversion, i, 0});
        Scalar w = half * Scalar(ch.eta(i));
        c -= (compose(tr, inv) + compose(inv, tr)) * w;
    }
    return c;
}

PolyOp casimir(CasimirKind kind, const Chart& ch, const Rat& delta, const Rat& lambda) {
    PolyOp rt = compose(invariant_generator(Gen::R, ch), invariant_generator(Gen::T, ch));
    PolyOp ee = euler_even(ch);
    PolyOp so = euler_odd(ch);
    PolyOp id = PolyOp::identity(ch);
    Scalar nd2(Rat(ch.n * ch.n) * delta * (delta - 1));

    // 2 E [1 + n(delta-1) - E]: the middle coefficient is doubled relative
    // to the single-E reading; the defining quadratic sum fixes it.
    PolyOp chat =
        rt + compose(id * Scalar(Rat(1) + Rat(ch.n) * (delta - 1)) - ee, ee) * Scalar(2) -
        id * nd2;

    PolyOp qqs = compose(invariant_generator(Gen::Q, ch), invariant_generator(Gen::QStar, ch));
    PolyOp dsd = compose(invariant_generator(Gen::DelStar, ch), invariant_generator(Gen::Del, ch));
    PolyOp ct = chat + compose(so, so - id * Scalar(ch.n)) + (qqs + dsd) * Scalar(2) -
                ee * Scalar(2);

    if (kind == CasimirKind::Tensorial) return ct;
    Scalar hi = Scalar::hbar_over_i();
    PolyOp d_del =
        compose(invariant_generator(Gen::DeRham, ch), invariant_generator(Gen::Del, ch));
    if (kind == CasimirKind::Hamiltonian) return ct + d_del * (Scalar(2) * hi);

    PolyOp gt = compose(invariant_generator(Gen::G, ch), invariant_generator(Gen::T, ch));
    PolyOp dd = invariant_generator(Gen::D, ch);
    PolyOp dsdel =
        compose(invariant_generator(Gen::DeRhamStar, ch), invariant_generator(Gen::Del, ch));
    PolyOp dqs =
        compose(invariant_generator(Gen::DeRham, ch), invariant_generator(Gen::QStar, ch));
    PolyOp dsqs =
        compose(invariant_generator(Gen::DeRhamStar, ch), invariant_generator(Gen::QStar, ch));
    PolyOp corr =
        gt -
        compose(ee + id * (Scalar(lambda) * Scalar(ch.n) + Scalar(Rat(1, 2))), dd) * Scalar(2) +
        d_del * Scalar(2) + dsdel + dqs + dsqs * Scalar(Rat(1, 2));
    return ct + corr * hi;
}

Rat casimir_eigenvalue(const Label& l, const Chart& ch, const Rat& delta) {
    int n = ch.n;
    Rat ghat = Rat(2 * l.s) * Rat(n + 2 * (l.k - l.s - 1)) +
               Rat(2 * l.k) * (Rat(1) + Rat(n) * (delta - 1) - Rat(l.k)) -
               Rat(n * n) * delta * (delta - 1);
    return ghat + Rat(l.kappa) * Rat(l.kappa - n) +
           Rat(2 * (l.alpha + l.beta - 1)) * Rat(l.k - 2 * l.s) +
           Rat(2 * (l.beta - l.alpha)) * Rat(l.kappa) + Rat(2 * l.alpha) * Rat(n - 2 * l.beta);
}

std::vector<IsoPair> component_isomorphisms(const Label& l, Harmonic& h) {
    std::vector<IsoPair> out;
    const Chart& ch = h.chart();
    auto basis = h.component_basis(l);
    if (basis.empty()) throw Error("unrealizable source label " + l.str());
    PolyOp del = invariant_generator(Gen::Del, ch);
    PolyOp delstar = invariant_generator(Gen::DelStar, ch);
    PolyOp q = invariant_generator(Gen::Q, ch);
    PolyOp qstar = invariant_generator(Gen::QStar, ch);
    PolyOp t = invariant_generator(Gen::T, ch);
    PolyOp r = invariant_generator(Gen::R, ch);

    auto roundtrip = [&](const std::function<SuperPoly(const SuperPoly&)>& fwd,
                         const std::function<SuperPoly(const SuperPoly&)>& bwd, Label target,
                         const char* fname, const char* bname) {
        if (!h.realizable(target)) throw Error("unrealizable target label " + target.str());
        Rat scalar;
        bool first = true;
        for (const auto& v : basis) {
            SuperPoly fz = fwd(v);
            SuperPoly back = bwd(fz);
            Scalar ratio;
            bool found = false;
            for (const auto& [m, c] : v.terms()) {
                ratio = back.coeff(m) / c;
                found = true;
                break;
            }
            if (!found) throw Error("empty basis vector");
            if (!(back == v * ratio)) throw Error("round trip is not scalar on " + l.str());
            if (first) {
                scalar = ratio.to_rational();
                first = false;
            } else if (scalar != ratio.to_rational()) {
                throw Error("round-trip scalar differs across the component " + l.str());
            }
        }
        out.push_back({l, target, fname, bname, scalar});
    };

    if (l.alpha == 1 && l.beta == 0) {
        if (l.kappa - 2 < 0) throw Error("unrealizable target label: kappa-2 < 0");
        roundtrip([&](const SuperPoly& v) { return delstar.apply(qstar.apply(v)); },
                  [&](const SuperPoly& v) { return q.apply(del.apply(v)); },
                  Label{l.k, l.kappa - 2, l.s, 0, 1}, "del* Q*", "Q del");
    }
    if (l.alpha == 0 && l.beta == 0 && l.s >= 1) {
        roundtrip([&](const SuperPoly& v) { return h.q0(delstar.apply(t.apply(v))); },
                  [&](const SuperPoly& v) { return r.apply(del.apply(qstar.apply(v))); },
                  Label{l.k, l.kappa, l.s - 1, 1, 1}, "Q0 del* T", "R del Q*");
    }
    return out;
}

}  // namespace superquant
