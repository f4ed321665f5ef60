#include "foxcalc/cohomology.hpp"

#include "foxcalc/errors.hpp"

namespace fox {

TensorElem TensorElem::pure(const RingElem& x, const RingElem& y) {
    if (!(x.ring() == y.ring())) throw MismatchError("tensor factors over different rings");
    TensorElem t(x.ring());
    for (const auto& [u, a] : x.terms())
        for (const auto& [v, b] : y.terms()) t.add_term(u, v, a * b);
    return t;
}

void TensorElem::add_term(const Word& x, const Word& y, const Scalar& c) {
    const Scalar v = normalize(ring_.coeff, c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace({x, y}, v);
    if (!inserted) {
        it->second = normalize(ring_.coeff, it->second + v);
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& t) {
    if (!(ring_ == t.ring_)) throw MismatchError("tensors over different rings");
    for (const auto& [k, c] : t.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& t) {
    if (!(ring_ == t.ring_)) throw MismatchError("tensors over different rings");
    for (const auto& [k, c] : t.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElem TensorElem::scale(const Scalar& k) const {
    TensorElem out(ring_);
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c * k);
    return out;
}

bool operator==(const TensorElem& a, const TensorElem& b) {
    if (!(a.ring_ == b.ring_)) throw MismatchError("tensors over different rings");
    return a.terms_ == b.terms_;
}

std::string TensorElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const bool negative = c < 0;
        const Scalar mag = negative ? Scalar(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        if (mag != 1) out += format_scalar(mag) + " ";
        out += "[" + ring_.print(key.first) + "|" + ring_.print(key.second) + "]";
    }
    return out;
}

RingElem mu_contract(const TensorElem& t) {
    RingElem out = t.ring().zero();
    for (const auto& [key, c] : t.terms()) out.add_term(key.first * key.second.inverse(), c);
    return out;
}

GroupElem group_identity(const GroupDesc& g) {
    return GroupElem{g.ring.identity(), g.ring.identity()};
}

GroupElem group_multiply(const GroupDesc& g, const GroupElem& x, const GroupElem& y) {
    if (g.kind == GroupKind::Product) return GroupElem{x.first * y.first, x.second * y.second};
    return GroupElem{x.first * y.first, g.ring.identity()};
}

GroupElem sample_group_elem(const GroupDesc& g, Sampler& rng, int max_len) {
    switch (g.kind) {
    case GroupKind::Free:
        return GroupElem{rng.free_word(g.ring.rank(), max_len), Word()};
    case GroupKind::Abelian:
        return GroupElem{rng.abelian_word(g.ring.rank(), max_len), g.ring.identity()};
    case GroupKind::Product: {
        Word a = rng.free_word(g.ring.rank(), max_len);
        Word b = rng.free_word(g.ring.rank(), max_len);
        return GroupElem{std::move(a), std::move(b)};
    }
    }
    throw DomainError("unknown group kind");
}

std::string print_group_elem(const GroupDesc& g, const GroupElem& x) {
    if (g.kind == GroupKind::Product) return "(" + g.ring.print(x.first) + "," + g.ring.print(x.second) + ")";
    return g.ring.print(x.first);
}

std::string_view module_name(ModuleKind kind) {
    switch (kind) {
    case ModuleKind::LeftRegular: return "left-regular";
    case ModuleKind::RightRegular: return "right-regular";
    case ModuleKind::Conjugation: return "conjugation";
    case ModuleKind::ProductBimodule: return "product-bimodule";
    case ModuleKind::Tensor: return "tensor";
    }
    return "?";
}

Side module_side(ModuleKind kind) { return kind == ModuleKind::RightRegular ? Side::Right : Side::Left; }

RingElem act(ModuleKind kind, const GroupDesc& g, const GroupElem& x, const RingElem& m) {
    const Ring& R = g.ring;
    switch (kind) {
    case ModuleKind::LeftRegular: return R.word(x.first) * m;
    case ModuleKind::RightRegular: return m * R.word(x.first);
    case ModuleKind::Conjugation: return R.word(x.first) * m * R.word(x.first.inverse());
    case ModuleKind::ProductBimodule: return R.word(x.first) * m * R.word(x.second.inverse());
    case ModuleKind::Tensor: break;
    }
    throw DomainError("tensor action applied to a group ring element");
}

TensorElem act(ModuleKind kind, const GroupDesc& g, const GroupElem& x, const TensorElem& m) {
    if (kind != ModuleKind::Tensor) throw DomainError("group ring action applied to a tensor");
    TensorElem out(g.ring);
    for (const auto& [key, c] : m.terms()) out.add_term(x.first * key.first, x.second * key.second, c);
    return out;
}

namespace {

template <class V>
Cochain<V> coboundary_impl(const Cochain<V>& c) {
    if (c.degree < 0 || c.degree > 3) throw DomainError("coboundary supports degrees 0 to 3");
    Cochain<V> out = c;
    out.degree = c.degree + 1;
    out.eval = [c](const std::vector<GroupElem>& g) {
        const auto n = static_cast<std::size_t>(c.degree);
        if (g.size() != n + 1) throw DomainError("cochain evaluated on a tuple of the wrong length");
        const bool left = module_side(c.module) == Side::Left;
        auto slice = [&](std::size_t from, std::size_t to) {
            return std::vector<GroupElem>(g.begin() + static_cast<std::ptrdiff_t>(from),
                                          g.begin() + static_cast<std::ptrdiff_t>(to));
        };
        V acc = left ? act(c.module, c.group, g[0], c(slice(1, n + 1))) : c(slice(1, n + 1));
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<GroupElem> merged = slice(0, i - 1);
            merged.push_back(group_multiply(c.group, g[i - 1], g[i]));
            for (std::size_t k = i + 1; k <= n; ++k) merged.push_back(g[k]);
            if (i % 2)
                acc -= c(merged);
            else
                acc += c(merged);
        }
        V last = left ? c(slice(0, n)) : act(c.module, c.group, g[n], c(slice(0, n)));
        if ((n + 1) % 2)
            acc -= last;
        else
            acc += last;
        return acc;
    };
    return out;
}

template <class V>
CheckReport check_vanishes_impl(const Cochain<V>& c, const std::string& name, std::size_t samples,
                                std::uint64_t seed, int max_len) {
    CheckReport report(name, samples, seed);
    Sampler rng(seed);
    for (std::size_t s = 0; s < samples && report.passed; ++s) {
        std::vector<GroupElem> args;
        for (int k = 0; k < c.degree; ++k) args.push_back(sample_group_elem(c.group, rng, max_len));
        const V value = c(args);
        if (!value.is_zero()) {
            std::string where;
            for (const auto& a : args) where += (where.empty() ? "" : ",") + print_group_elem(c.group, a);
            report.fail("at (" + where + ") value=" + value.str());
        }
    }
    return report;
}

}  // namespace

RingCochain coboundary(const RingCochain& c) { return coboundary_impl(c); }
TensorCochain coboundary(const TensorCochain& c) { return coboundary_impl(c); }

CheckReport check_vanishes(const RingCochain& c, const std::string& name, std::size_t samples, std::uint64_t seed,
                           int max_len) {
    return check_vanishes_impl(c, name, samples, seed, max_len);
}

CheckReport check_vanishes(const TensorCochain& c, const std::string& name, std::size_t samples,
                           std::uint64_t seed, int max_len) {
    return check_vanishes_impl(c, name, samples, seed, max_len);
}

CheckReport check_cocycle(const RingCochain& c, std::size_t samples, std::uint64_t seed, int max_len) {
    return check_vanishes(coboundary(c), "cocycle-" + std::string(module_name(c.module)), samples, seed, max_len);
}

CheckReport check_cocycle(const TensorCochain& c, std::size_t samples, std::uint64_t seed, int max_len) {
    return check_vanishes(coboundary(c), "cocycle-tensor", samples, seed, max_len);
}

RingCochain constant_cochain(const GroupDesc& g, ModuleKind module, const RingElem& m) {
    return RingCochain{0, g, module, [m](const std::vector<GroupElem>&) { return m; }};
}

RingCochain kappa_from_pairing(const FoxPairing& p) {
    GroupDesc g{GroupKind::Free, p.ring()};
    return RingCochain{2, g, ModuleKind::Conjugation, [p](const std::vector<GroupElem>& x) {
                           const Word& a = x.at(0).first;
                           const Word& b = x.at(1).first;
                           return evaluate(p, a, b) * p.ring().word(b.inverse() * a.inverse());
                       }};
}

QuasiDerivation::QuasiDerivation(FoxPairing p, std::vector<RingElem> gen_values)
    : pairing_(std::move(p)), gen_values_(std::move(gen_values)) {
    if (static_cast<int>(gen_values_.size()) != pairing_.rank())
        throw MismatchError("quasi-derivation needs one value per generator");
    for (const auto& v : gen_values_)
        if (!(v.ring() == pairing_.ring())) throw MismatchError("quasi-derivation value over a different ring");
}

RingElem QuasiDerivation::letter_value(std::int64_t letter) const {
    const Ring& R = pairing_.ring();
    const int gen = static_cast<int>((letter > 0 ? letter : -letter) - 1);
    const RingElem& qx = gen_values_.at(static_cast<std::size_t>(gen));
    if (letter > 0) return qx;
    const Word x = Word::generator(gen, 1);
    const RingElem xinv = R.word(x.inverse());
    return xinv * (-(qx * xinv) - evaluate(pairing_, x, x.inverse()));
}

RingElem QuasiDerivation::on_letters(std::span<const std::int64_t> letters) const {
    const Ring& R = pairing_.ring();
    RingElem acc = R.zero();
    Word w;
    for (auto l : letters) {
        const int gen = static_cast<int>((l > 0 ? l : -l) - 1);
        const Word y = Word::generator(gen, l > 0 ? 1 : -1);
        acc = acc * R.word(y) + R.word(w) * letter_value(l) + evaluate(pairing_, w, y);
        w = w * y;
    }
    return acc;
}

RingElem QuasiDerivation::operator()(const Word& w) const { return on_letters(w.letters()); }

QuasiExtension quasi_derivation_extend(const FoxPairing& p, std::vector<RingElem> gen_values, std::size_t samples,
                                       std::uint64_t seed, int max_len) {
    QuasiExtension out{QuasiDerivation(p, std::move(gen_values)), CheckReport("quasi-derivation", samples, seed)};
    const QuasiDerivation& q = out.q;
    const Ring& R = p.ring();
    Sampler rng(seed);
    if (!q(R.identity()).is_zero()) out.report.fail("q(1) != 0");
    for (std::size_t s = 0; s < samples && out.report.passed; ++s) {
        const Word a = rng.free_word(R.rank(), max_len);
        const Word b = rng.free_word(R.rank(), max_len);
        const RingElem lhs = q(a * b);
        const RingElem rhs = q(a) * R.word(b) + R.word(a) * q(b) + evaluate(p, a, b);
        if (!(lhs == rhs)) {
            out.report.fail("eq12 a=" + R.print(a) + " b=" + R.print(b) + " q(ab)=" + lhs.str() + " rhs=" + rhs.str());
            break;
        }
        // Insert a cancelling pair at a random position of a.
        std::vector<std::int64_t> seq(a.letters().begin(), a.letters().end());
        const auto pos = static_cast<std::ptrdiff_t>(rng.below(seq.size() + 1));
        const std::int64_t x = rng.range(1, R.rank()) * (rng.below(2) ? 1 : -1);
        seq.insert(seq.begin() + pos, {x, -x});
        if (!(q.on_letters(seq) == q(a))) out.report.fail("cancellation a=" + R.print(a) + " at " + std::to_string(pos));
    }
    return out;
}

RingCochain derivation_cochain(const Derivation& d) {
    GroupDesc g{GroupKind::Free, d.ring};
    const ModuleKind kind = d.side == Side::Left ? ModuleKind::LeftRegular : ModuleKind::RightRegular;
    return RingCochain{1, g, kind, [d](const std::vector<GroupElem>& x) { return extend_derivation(d, x.at(0).first); }};
}

RingCochain left_cocycle_of_right_derivation(const Derivation& dr) {
    if (dr.side != Side::Right) throw MismatchError("expected a right derivation");
    GroupDesc g{GroupKind::Free, dr.ring};
    return RingCochain{1, g, ModuleKind::LeftRegular, [dr](const std::vector<GroupElem>& x) {
                           return extend_derivation(dr, x.at(0).first.inverse()).involute();
                       }};
}

TensorCochain cross_product_1_1(const RingCochain& u, const RingCochain& v, std::size_t samples, std::uint64_t seed) {
    for (const RingCochain* c : {&u, &v}) {
        if (c->degree != 1 || c->group.kind != GroupKind::Free || c->module != ModuleKind::LeftRegular)
            throw DomainError("cross product needs left regular 1-cochains on a free group");
        const CheckReport rep = check_cocycle(*c, samples, seed);
        if (!rep.passed) throw DomainError("cross product input is not a cocycle: " + rep.counterexample);
    }
    if (!(u.group.ring == v.group.ring)) throw MismatchError("cross product factors over different rings");
    GroupDesc g{GroupKind::Product, u.group.ring};
    return TensorCochain{2, g, ModuleKind::Tensor, [u, v](const std::vector<GroupElem>& x) {
                             const Ring& R = u.group.ring;
                             const RingElem left = u({GroupElem{x.at(0).first, Word()}});
                             const RingElem right = R.word(x.at(0).second) * v({GroupElem{x.at(1).second, Word()}});
                             return TensorElem::pure(left, right);
                         }};
}

RingCochain mu_compose(const TensorCochain& t) {
    return RingCochain{t.degree, t.group, ModuleKind::ProductBimodule,
                       [t](const std::vector<GroupElem>& x) { return mu_contract(t(x)); }};
}

RhoResult rho_map(const RingCochain& f, const WordFunction& q, std::size_t samples, std::uint64_t seed, int max_len) {
    if (f.degree != 2 || f.group.kind != GroupKind::Product || f.module != ModuleKind::ProductBimodule)
        throw DomainError("rho needs a 2-cochain on G2 x G1 in the product bimodule");
    const Ring R = f.group.ring;
    const Word e = R.identity();

    CheckReport report("rho-side-conditions", samples, seed);
    Sampler rng(seed);
    for (std::size_t s = 0; s < samples && report.passed; ++s) {
        const Word b = rng.free_word(R.rank(), max_len);
        const Word b2 = rng.free_word(R.rank(), max_len);
        // (1,b).m = m b^-1
        const RingElem dq1 = q(b2) * R.word(b.inverse()) - q(b * b2) + q(b);
        const RingElem f1 = f({GroupElem{e, b}, GroupElem{e, b2}});
        if (!(dq1 == f1)) {
            report.fail("G1 b=" + R.print(b) + " b'=" + R.print(b2) + " dq=" + dq1.str() + " f=" + f1.str());
            break;
        }
        const Word a = rng.free_word(R.rank(), max_len);
        const Word a2 = rng.free_word(R.rank(), max_len);
        const RingElem dq2 = R.word(a) * q(a2) - q(a * a2) + q(a);
        const RingElem f2 = f({GroupElem{a, e}, GroupElem{a2, e}});
        if (!(dq2 == -f2)) report.fail("G2 a=" + R.print(a) + " a'=" + R.print(a2) + " dq=" + dq2.str() + " f=" + f2.str());
    }
    if (!report.passed) throw DomainError("rho side condition fails: " + report.counterexample);

    auto on_words = [f, q, R, e](const Word& a, const Word& b) {
        const Word binv = b.inverse();
        return f({GroupElem{a, e}, GroupElem{e, binv}}) - f({GroupElem{e, binv}, GroupElem{a, e}}) +
               q(a) * (R.one() - R.word(b)) + (R.one() - R.word(a)) * q(binv);
    };
    PairingEvaluator eta = [on_words, R](const RingElem& x, const RingElem& y) {
        RingElem out = R.zero();
        for (const auto& [g, c] : x.terms())
            for (const auto& [h, d] : y.terms()) out += on_words(g, h).scale(c * d);
        return out;
    };
    return RhoResult{std::move(eta), std::move(report)};
}

}  // namespace fox
