#pragma once

#include <vector>

#include "nschur/nschur.hpp"
#include "nschur/plucker.hpp"

namespace nschur {

/// Bilinear KP form
/// (3/4) T T_yy - (3/4) T_y^2 + T_x T_t - T T_xt + (3/4) T_xx^2 - T_x T_xxx + (1/4) T T_xxxx
/// with x, y, t = t_1, t_2, t_3.
template <class F>
F hirota_form(const F& tau) {
    const Variable x = Variable::x(), y = Variable::y(), t = Variable::t();
    F tx = tau.derivative(x), ty = tau.derivative(y), tt = tau.derivative(t);
    F txx = tx.derivative(x), txxx = txx.derivative(x), txxxx = txxx.derivative(x);
    F tyy = ty.derivative(y), txt = tx.derivative(t);
    auto q = [](int a, int b) { return F(make_rational(a, b)); };
    return q(3, 4) * tau * tyy - q(3, 4) * ty * ty + tx * tt - tau * txt + q(3, 4) * txx * txx - tx * txxx +
           q(1, 4) * tau * txxxx;
}

inline Polynomial hirota_residual(const Polynomial& tau) { return hirota_form(tau); }

/// (3/4) u_yy - (u_t - (1/4)(6 u u_x + u_xxx))_x.
inline RationalFunction kp_residual(const RationalFunction& u) {
    const Variable x = Variable::x(), y = Variable::y(), t = Variable::t();
    RationalFunction ux = u.derivative(x);
    RationalFunction uxxx = ux.derivative(x).derivative(x);
    RationalFunction inner = u.derivative(t) - (RationalFunction(6) * u * ux + uxxx).scaled(make_rational(1, 4));
    return u.derivative(y).derivative(y).scaled(make_rational(3, 4)) - inner.derivative(x);
}

/// u = 2 (log tau)_xx.
inline RationalFunction tau_to_u(const RationalFunction& tau) {
    const Variable x = Variable::x();
    RationalFunction tx = tau.derivative(x);
    return (tau * tx.derivative(x) - tx * tx).scaled(2) / (tau * tau);
}

/// Converts a quadratic form in pi variables (labelled by k-subsets) back to a relation.
inline QuadraticRelation relation_from_polynomial(const Polynomial& p, int k) {
    QuadraticRelation rel;
    auto label = [k](const Variable& v) {
        if (v.kind != Variable::Kind::Pi) throw InvalidRange("expected a form in pi variables");
        return Subset(v.key.begin(), v.key.begin() + k);
    };
    for (const auto& term : p.terms()) {
        const auto& fs = term.monomial.factors();
        if (term.monomial.degree() != 2) throw InvalidRange("expected a quadratic form");
        Subset a = label(fs[0].first);
        Subset b = fs.size() == 1 ? a : label(fs[1].first);
        rel.add(a, b, term.coeff);
    }
    return rel;
}

inline Variable pi_variable(const Subset& s) {
    if (s.empty() || s.size() > 3) throw InvalidRange("pi variables carry one to three labels");
    return Variable::pi(s[0], s.size() > 1 ? s[1] : 0, s.size() > 2 ? s[2] : 0);
}

/// tau = sum over S in S_{k,n} of pi_S f_S^1 (Schur family, h_k from exp(sign sum t_i z^i)).
inline Polynomial grassmann_schur_tau(int k, int n, int sign = +1) {
    Polynomial tau;
    for (const auto& s : enumerate_Skn(k, n))
        tau += var(pi_variable(subset_label(s, k, n))) * schur_polynomial(to_partition(s), sign);
    return tau;
}

struct QuadricReport {
    int k = 2, n = 4, sign = 1;
    std::vector<std::pair<Monomial, QuadraticRelation>> forms;  // nonzero t-monomial coefficients
    bool match = false;
    QuadraticRelation relation;  // normalized common form when the span is one-dimensional

    json to_json() const {
        json fs = json::array();
        for (const auto& [m, r] : forms) fs.push_back({{"monomial", m.to_string()}, {"form", r.to_string()}});
        return {{"k", k}, {"n", n}, {"sign", sign}, {"relations_found", forms.size()}, {"forms", fs},
                {"match", match}, {"relation", relation.to_string()}};
    }
};

/// Collects the Hirota residual of the Grassmann-Schur tau by t-monomial and
/// checks that every coefficient lies in the span of the exchange relations.
inline QuadricReport quadric_extraction(int k = 2, int n = 4, int sign = +1) {
    QuadricReport rep;
    rep.k = k;
    rep.n = n;
    rep.sign = sign;
    Polynomial R = hirota_residual(grassmann_schur_tau(k, n, sign));
    auto groups = R.collect([](const Variable& v) { return v.kind == Variable::Kind::Time; });
    for (auto& [m, coeff] : groups) rep.forms.emplace_back(m, relation_from_polynomial(coeff, k));

    auto rels = exchange_relations(k, n);
    const int base = relation_rank(rels);
    rep.match = !rep.forms.empty();
    for (const auto& [m, f] : rep.forms) {
        auto with = rels;
        with.push_back(f);
        rep.match = rep.match && relation_rank(with) == base;
    }
    if (rep.match) {
        std::vector<QuadraticRelation> only;
        for (const auto& [m, f] : rep.forms) only.push_back(f);
        if (relation_rank(only) == 1) {
            rep.relation = only.front();
            BigRational lead = rep.relation.terms.begin()->second;
            for (auto& [key, c] : rep.relation.terms) c /= lead;
        }
    }
    return rep;
}

}  // namespace nschur
