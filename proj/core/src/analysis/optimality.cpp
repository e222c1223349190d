#include "kakeya/analysis/optimality.hpp"

#include "kakeya/error.hpp"
#include "kakeya/sequences/checks.hpp"

namespace kakeya {

IndexClass classify_index(const Sequence& seq, Index n, unsigned max_bits, Index k_cap) {
    if (n == 0) throw ValidationError("indices are 1-based");
    IndexClass c;
    c.n = n;
    Real p = seq.term(n);
    Ordering vs_tail = cmp_adaptive(p, seq.tail(n), max_bits);
    if (vs_tail == Ordering::Greater) throw ValidationError("p_n > S_n at n = " + std::to_string(n));
    if (vs_tail == Ordering::EqualCertified) {
        c.kind = IndexClass::Kind::TailDegenerate;
        c.reason = "p_n = S_n: partial sums stay below p_n for every k";
        return c;
    }
    Real partial;
    for (Index m = 1; m <= k_cap + 1; ++m) {
        Real before = partial;
        partial = partial + seq.term(n + m);
        switch (cmp_adaptive(partial, p, max_bits)) {
            case Ordering::Less: continue;
            case Ordering::EqualCertified:
                c.kind = IndexClass::Kind::Equality;
                c.k = m - 1;
                return c;
            case Ordering::Greater:
                if (m == 1) throw ValidationError("p_n <= p_{n+1} at n = " + std::to_string(n));
                c.kind = IndexClass::Kind::Sandwich;
                c.k = m - 1;
                c.sandwich = SandwichWitness{n, m - 1, snapshot(before), snapshot(partial)};
                return c;
            case Ordering::Inconclusive:
                c.kind = IndexClass::Kind::Inconclusive;
                c.k = m - 1;
                c.reason = "partial sum of " + std::to_string(m) + " terms versus p_n unresolved at the precision cap";
                return c;
        }
    }
    c.kind = IndexClass::Kind::Inconclusive;
    c.reason = "no equality or sandwich with k <= " + std::to_string(k_cap);
    return c;
}

std::optional<SandwichWitness> find_sandwich_at(const Sequence& seq, Index n, unsigned max_bits) {
    IndexClass c = classify_index(seq, n, max_bits);
    return c.sandwich;
}

std::string to_string(OptimalityVerdict::Status s) {
    switch (s) {
        case OptimalityVerdict::Status::OptimalWitness: return "optimal_witness";
        case OptimalityVerdict::Status::NotOptimal: return "not_optimal";
        case OptimalityVerdict::Status::TailDegenerate: return "tail_degenerate";
        case OptimalityVerdict::Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

OptimalityVerdict check_optimality(const Sequence& seq, Index depth, unsigned max_bits) {
    if (depth == 0) throw ValidationError("depth must be at least 1");
    OptimalityVerdict v;
    v.depth = depth;
    KakeyaVerdict kv = check_kakeya(seq, depth, max_bits);
    if (kv.status == KakeyaVerdict::Status::NotKakeya) {
        throw ValidationError("not a Kakeya sequence: p_n > S_n at n = " + std::to_string(kv.witness));
    }
    if (kv.status == KakeyaVerdict::Status::Inconclusive) {
        v.unresolved = kv.witness;
        v.reason = "Kakeya property unresolved at n = " + std::to_string(kv.witness);
        return v;
    }
    if (auto bad = first_non_decrease(seq, depth, max_bits)) {
        throw ValidationError("sequence is not strictly decreasing at n = " + std::to_string(*bad));
    }

    std::vector<IndexClass> classes;
    for (Index n = 1; n <= depth; ++n) classes.push_back(classify_index(seq, n, max_bits));

    Index first_unresolved = 0;
    for (const auto& c : classes) {
        if (c.kind == IndexClass::Kind::Inconclusive && first_unresolved == 0) first_unresolved = c.n;
        if (c.kind == IndexClass::Kind::Sandwich) {
            v.status = OptimalityVerdict::Status::NotOptimal;
            v.sandwich = c.sandwich;
            v.smallest = first_unresolved == 0;
            v.reason = "sandwich at n = " + std::to_string(c.n) + " with k = " + std::to_string(c.k);
            return v;
        }
    }
    if (first_unresolved) {
        v.unresolved = first_unresolved;
        v.reason = classes[first_unresolved - 1].reason;
        return v;
    }
    for (const auto& c : classes) {
        if (c.kind == IndexClass::Kind::TailDegenerate) v.degenerate_indices.push_back(c.n);
    }
    if (!v.degenerate_indices.empty()) {
        v.status = OptimalityVerdict::Status::TailDegenerate;
        v.reason = "p_n = S_n: neither an equality nor a sandwich exists at these indices";
        return v;
    }
    for (const auto& c : classes) v.k.push_back(c.k);
    for (Index i = 1; i < v.k.size(); ++i) {
        if (v.k[i] < v.k[i - 1]) {
            // Equalities fix k_n uniquely, so no nondecreasing witness exists, yet no sandwich was found.
            v.unresolved = i + 1;
            v.reason = "equalities hold at every n but k_n decreases at n = " + std::to_string(i + 1);
            v.k.clear();
            return v;
        }
    }
    v.status = OptimalityVerdict::Status::OptimalWitness;
    v.reason = "p_n = p_{n+1} + ... + p_{n+1+k_n} certified exactly for n = 1.." + std::to_string(depth);
    return v;
}

CounterexampleReport build_counterexample(const Sequence& seq, const SandwichWitness& w, unsigned max_bits) {
    if (w.n == 0 || w.k == 0) throw ValidationError("sandwich witness needs n >= 1 and k >= 1");
    CounterexampleReport r;
    r.n = w.n;
    r.k = w.k;
    r.position = w.n + 1 + w.k;
    Real x = seq.partial_sum(w.n + 1, r.position);
    r.x = snapshot(x);
    for (Index i = 1; i <= r.position; ++i) r.alt_digits.push_back(i > w.n ? 1 : 0);
    ExpansionTrace g = greedy_digits(seq, x, r.position, max_bits);
    r.greedy_digits = g.digits;
    Real greedy_error = g.remainders.back();
    Real alt_error = x - evaluate(seq, r.alt_digits);
    r.greedy_error = snapshot(greedy_error);
    r.alt_error = snapshot(alt_error);
    Ordering s = sign_adaptive(greedy_error, max_bits);
    if (s == Ordering::Inconclusive) throw PrecisionExhausted(r.position, "sign of the greedy error");
    r.certified = s == Ordering::Greater;
    return r;
}

}  // namespace kakeya
