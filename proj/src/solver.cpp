#include "repcat/solver.hpp"

#include "repcat/concat.hpp"
#include "repcat/errors.hpp"

#include <array>
#include <string>

namespace repcat {

namespace {

constexpr std::array<std::string_view, 15> kLabels = {
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII", "XIII", "XIV", "CRT"};

i64 as_signed(u64 x) { return static_cast<i64>(x); }

// Binds x (mod modulus) and, when it reads shorter, the negative representative.
void bind_residue(TraceLog& trace, const std::string& name, u64 x, u64 modulus) {
    trace.bind(name, as_signed(x));
    if (x != 0 && modulus - x < x)
        trace.bind(name + "_signed", -as_signed(modulus - x));
}

u64 ceil_div(u64 num, u64 den) { return num / den + (num % den != 0); }

SolutionSet residue_class(u64 residue, u64 modulus, TraceLog& trace) {
    auto s = SolutionSet::progression(residue, modulus);
    trace.bind("residue", as_signed(s.as_progression().residue));
    trace.bind("modulus", as_signed(modulus));
    return s;
}

class PrimePowerRun {
public:
    PrimePowerRun(u64 n, u64 b, i64 a, u64 p, unsigned alpha) : n_(n), b_(b), a_(a), p_(p), alpha_(alpha) {}

    SolveResult run() {
        Step next = Step::I;
        std::optional<SolutionSet> out;
        while (!out) {
            trace_.enter(next);
            switch (next) {
            case Step::I: out = step_i(next); break;
            case Step::II: out = step_ii(next); break;
            case Step::III: out = step_iii(next); break;
            case Step::IV: out = step_iv(next); break;
            case Step::V: out = step_v(next); break;
            case Step::VI: out = step_vi(); break;
            case Step::VII: out = step_vii(next); break;
            case Step::VIII: out = step_viii(next); break;
            case Step::IX: out = step_ix(); break;
            case Step::X: out = step_x(next); break;
            case Step::XI: out = step_xi(next); break;
            case Step::XII: out = step_xii(next); break;
            case Step::XIII: out = step_xiii(next); break;
            case Step::XIV: out = step_xiv(); break;
            case Step::CRT: throw std::logic_error("CRT is not a prime-power step");
            }
        }
        return {std::move(*out), std::move(trace_)};
    }

private:
    using Outcome = std::optional<SolutionSet>;

    Outcome step_i(Step& next) {
        modulus_ = checked_pow(p_, alpha_);
        d_ = gcd(n_, modulus_);
        a_norm_ = normalize(a_, modulus_);
        trace_.bind("p", as_signed(p_));
        trace_.bind("alpha", alpha_);
        trace_.bind("d", as_signed(d_));
        if (a_norm_ % d_ != 0)
            return SolutionSet::empty();
        next = Step::II;
        return {};
    }

    Outcome step_ii(Step& next) {
        L_ = digit_length(n_, b_);
        alpha1_ = alpha_ - valuation(as_signed(d_), p_);
        const BigInt one_minus_bl = 1 - pow(BigInt(b_), L_);
        beta_ = valuation(one_minus_bl, p_);
        alpha2_ = alpha1_ + beta_;
        trace_.bind("L", L_);
        trace_.bind("alpha1", alpha1_);
        trace_.bind("beta", beta_);
        trace_.bind("alpha2", alpha2_);
        if (alpha2_ == 0)
            return SolutionSet::naturals();
        const u64 mod1 = checked_pow(p_, alpha1_);
        mod2_ = checked_pow(p_, alpha2_);
        const u64 inv = mod_inverse(as_signed((n_ / d_) % mod1), mod1);
        a1_ = mul_mod((a_norm_ / d_) % mod1, inv, mod1);
        a2_ = sub_mod(1, mul_mod(a1_, normalize(one_minus_bl, mod2_), mod2_), mod2_);
        bind_residue(trace_, "a1", a1_, mod1);
        bind_residue(trace_, "a2", a2_, mod2_);
        next = (p_ != 2 || alpha2_ < 3) ? Step::XII : Step::III;
        return {};
    }

    Outcome step_iii(Step& next) {
        if (b_ % 2 != a2_ % 2)
            return SolutionSet::empty();
        next = (b_ % 2 == 1) ? Step::VII : Step::IV;
        return {};
    }

    Outcome step_iv(Step& next) {
        delta_ = valuation(as_signed(b_), p_);
        trace_.bind("delta", delta_);
        if (a2_ == 0) {
            // b^(Lk) == 0 (mod p^alpha2) iff delta*L*k >= alpha2
            const u64 threshold = ceil_div(alpha2_, u64{delta_} * L_);
            trace_.bind("threshold", as_signed(threshold));
            return SolutionSet::progression(0, 1, threshold);
        }
        next = Step::V;
        return {};
    }

    Outcome step_v(Step& next) {
        epsilon_ = valuation(as_signed(a2_), p_);
        trace_.bind("epsilon", epsilon_);
        if (epsilon_ % (delta_ * L_) != 0)
            return SolutionSet::empty();
        next = Step::VI;
        return {};
    }

    Outcome step_vi() {
        const u64 k = epsilon_ / (delta_ * L_);
        trace_.bind("k", as_signed(k));
        if (pow_mod(b_, epsilon_ / delta_, mod2_) == a2_)
            return SolutionSet::finite({k});
        return SolutionSet::empty();
    }

    Outcome step_vii(Step& next) {
        const auto bd = two_adic_decompose(as_signed(b_ % mod2_), alpha2_);
        const auto ad = two_adic_decompose(as_signed(a2_), alpha2_);
        mu1_ = bd.mu;
        nu1_ = bd.nu;
        mu2_ = ad.mu;
        nu2_ = ad.nu;
        trace_.bind("mu1", mu1_);
        trace_.bind("nu1", as_signed(nu1_));
        trace_.bind("mu2", mu2_);
        trace_.bind("nu2", as_signed(nu2_));
        if ((mu1_ * L_) % 2 == 0 && mu2_ % 2 == 1)
            return SolutionSet::empty();
        next = Step::VIII;
        return {};
    }

    Outcome step_viii(Step& next) {
        half_ = u64{1} << (alpha2_ - 2);
        nu1_l_ = mul_mod(nu1_, L_, half_);  // nu1*L mod 2^(alpha2-2); gcd is unchanged
        f_ = gcd(nu1_l_, half_);
        trace_.bind("f", as_signed(f_));
        if (nu2_ % f_ != 0)
            return SolutionSet::empty();
        next = ((mu1_ * L_) % 2 == 1) ? Step::X : Step::IX;
        return {};
    }

    Outcome step_ix() {
        const u64 modulus = half_ / f_;
        if (modulus == 1)
            return residue_class(0, 1, trace_);
        const u64 inv = mod_inverse(as_signed((nu1_l_ / f_) % modulus), modulus);
        return residue_class(mul_mod((nu2_ / f_) % modulus, inv, modulus), modulus, trace_);
    }

    Outcome step_x(Step& next) {
        if (f_ == half_)
            return residue_class(mu2_, 2, trace_);
        next = Step::XI;
        return {};
    }

    Outcome step_xi(Step& next) {
        if (mu2_ % 2 != (nu2_ / f_) % 2)
            return SolutionSet::empty();
        next = Step::IX;
        return {};
    }

    Outcome step_xii(Step& next) {
        const bool p_divides_b = b_ % p_ == 0;
        const bool p_divides_a2 = a2_ % p_ == 0;
        if (p_divides_b != p_divides_a2)
            return SolutionSet::empty();
        next = p_divides_b ? Step::IV : Step::XIII;
        return {};
    }

    Outcome step_xiii(Step& next) {
        phi_ = checked_pow(p_, alpha2_ - 1) * (p_ - 1);
        trace_.bind("phi", as_signed(phi_));
        if (phi_ == 1)  // units mod 2: every k works
            return SolutionSet::naturals();
        g_ = primitive_root(p_, alpha2_);
        ind_b_ = discrete_log(g_, as_signed(b_ % mod2_), p_, alpha2_);
        ind_a2_ = discrete_log(g_, as_signed(a2_), p_, alpha2_);
        l_ind_b_ = mul_mod(L_, ind_b_, phi_);
        f_ = gcd(l_ind_b_, phi_);
        trace_.bind("g", as_signed(g_));
        trace_.bind("ind_b", as_signed(ind_b_));
        trace_.bind("ind_a2", as_signed(ind_a2_));
        trace_.bind("f", as_signed(f_));
        if (ind_a2_ % f_ != 0)
            return SolutionSet::empty();
        next = Step::XIV;
        return {};
    }

    Outcome step_xiv() {
        const u64 modulus = phi_ / f_;
        if (modulus == 1)
            return residue_class(0, 1, trace_);
        const u64 inv = mod_inverse(as_signed((l_ind_b_ / f_) % modulus), modulus);
        return residue_class(mul_mod((ind_a2_ / f_) % modulus, inv, modulus), modulus, trace_);
    }

    const u64 n_, b_;
    const i64 a_;
    const u64 p_;
    const unsigned alpha_;
    TraceLog trace_;

    u64 modulus_ = 1, d_ = 1, a_norm_ = 0;
    unsigned L_ = 0, alpha1_ = 0, beta_ = 0, alpha2_ = 0;
    u64 mod2_ = 1, a1_ = 0, a2_ = 0;
    unsigned delta_ = 0, epsilon_ = 0;
    unsigned mu1_ = 0, mu2_ = 0;
    u64 nu1_ = 0, nu2_ = 0, half_ = 1, nu1_l_ = 0, f_ = 1;
    u64 phi_ = 1, g_ = 1, ind_b_ = 0, ind_a2_ = 0, l_ind_b_ = 0;
};

} // namespace

void CongruenceProblem::validate() const {
    if (n < 1)
        throw DomainError("n must be >= 1");
    if (base < 2)
        throw DomainError("base must be >= 2");
    if (m < 1)
        throw DomainError("modulus must be >= 1");
}

std::string_view step_label(Step s) { return kLabels[static_cast<std::size_t>(s)]; }

std::optional<Step> step_from_label(std::string_view label) {
    for (std::size_t i = 0; i < kLabels.size(); ++i) {
        if (kLabels[i] == label)
            return static_cast<Step>(i);
    }
    return std::nullopt;
}

std::optional<i64> TraceStep::get(std::string_view name) const {
    for (const auto& b : bindings) {
        if (b.name == name)
            return b.value;
    }
    return std::nullopt;
}

void TraceLog::bind(std::string name, i64 value) {
    if (steps_.empty())
        throw std::logic_error("bind before any step");
    steps_.back().bindings.push_back({std::move(name), value});
}

void TraceLog::append(const TraceLog& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

bool TraceLog::visited(Step s) const {
    for (const auto& st : steps_) {
        if (st.step == s)
            return true;
    }
    return false;
}

std::optional<i64> TraceLog::value(Step s, std::string_view name) const {
    for (const auto& st : steps_) {
        if (st.step == s)
            return st.get(name);
    }
    return std::nullopt;
}

SolveResult solve_prime_power(u64 n, u64 b, i64 a, u64 p, unsigned alpha) {
    CongruenceProblem{n, b, a, 1}.validate();
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    if (alpha < 1)
        throw DomainError("prime-power exponent must be >= 1");
    if (b > kMaxModulus)
        throw CapacityError("base exceeds 2^62");
    return PrimePowerRun(n, b, a, p, alpha).run();
}

SolveResult solve(const CongruenceProblem& problem) {
    problem.validate();
    SolveResult result{SolutionSet::naturals(), {}};
    if (problem.m == 1) {
        result.trace.enter(Step::CRT);
        result.trace.bind("m", 1);
        return result;
    }
    if (problem.m > kMaxModulus)
        throw CapacityError("modulus exceeds 2^62");
    const Factorization factors = factorize(problem.m);
    for (const auto& f : factors) {
        auto part = solve_prime_power(problem.n, problem.base, problem.a, f.prime, f.exponent);
        result.trace.append(part.trace);
        result.solution = intersect(result.solution, part.solution);
    }
    result.trace.enter(Step::CRT);
    result.trace.bind("m", as_signed(problem.m));
    result.trace.bind("factors", static_cast<i64>(factors.size()));
    if (result.solution.is_progression()) {
        const auto& pr = result.solution.as_progression();
        result.trace.bind("residue", as_signed(pr.residue));
        result.trace.bind("modulus", as_signed(pr.modulus));
        result.trace.bind("min", as_signed(pr.min));
    }
    return result;
}

} // namespace repcat
