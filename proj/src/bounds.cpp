#include "lcf/bounds.hpp"

#include <optional>
#include <string>

#include <mpfr.h>

namespace lcf {

namespace {

class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

    static void ratio(Interval& out, long num, long den)
    {
        mpfr_set_si(out.lo_.get(), num, MPFR_RNDD);
        mpfr_div_si(out.lo_.get(), out.lo_.get(), den, MPFR_RNDD);
        mpfr_set_si(out.hi_.get(), num, MPFR_RNDU);
        mpfr_div_si(out.hi_.get(), out.hi_.get(), den, MPFR_RNDU);
    }

    // monotone increasing maps
    void log() { apply(mpfr_log); }
    void sqrt() { apply(mpfr_sqrt); }

    void add_si(long c)
    {
        mpfr_add_si(lo_.get(), lo_.get(), c, MPFR_RNDD);
        mpfr_add_si(hi_.get(), hi_.get(), c, MPFR_RNDU);
    }

    /// c / [lo, hi] for c >= 0 and lo > 0
    void reciprocal_times(long c)
    {
        Real t(mpfr_get_prec(lo_.get()));
        mpfr_si_div(t.get(), c, hi_.get(), MPFR_RNDD);
        mpfr_si_div(hi_.get(), c, lo_.get(), MPFR_RNDU);
        mpfr_set(lo_.get(), t.get(), MPFR_RNDD);
    }

    bool positive() const { return mpfr_sgn(lo_.get()) > 0; }

    /// floor common to both ends, if any
    std::optional<long> common_floor() const
    {
        long a = mpfr_get_si(lo_.get(), MPFR_RNDD);
        long b = mpfr_get_si(hi_.get(), MPFR_RNDD);
        if (a == b)
            return a;
        return std::nullopt;
    }

private:
    template <class F>
    void apply(F f)
    {
        f(lo_.get(), lo_.get(), MPFR_RNDD);
        f(hi_.get(), hi_.get(), MPFR_RNDU);
    }

    Real lo_, hi_;
};

template <class Eval>
long decide_floor(Eval eval)
{
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        if (auto f = eval(prec))
            return *f;
    }
    throw ResourceLimitError("could not decide floor within the precision limit");
}

} // namespace

long k2l_threshold_lower_bound(long l)
{
    if (l < 16)
        throw InvalidArgument("the K_{2,l} lower bound needs l >= 16, got " + std::to_string(l));
    const long q = l / 4;
    return decide_floor([q](mpfr_prec_t prec) -> std::optional<long> {
        Interval x(prec);
        Interval::ratio(x, 16, 7);
        x.log();
        x.reciprocal_times(q);
        x.sqrt();
        x.add_si(1);
        return x.common_floor();
    });
}

Count thomassen_upper_bound(const Graph& g)
{
    return pow(static_cast<long>(g.num_vertices()), 10) + 1;
}

long edge_count_upper_bound(std::size_t num_edges)
{
    if (num_edges < 1)
        throw InvalidArgument("edge-count bound needs at least one edge");
    if (num_edges == 1)
        return 1; // expression is exactly 1
    const long e1 = static_cast<long>(num_edges) - 1;
    return decide_floor([e1](mpfr_prec_t prec) -> std::optional<long> {
        Interval x(prec);
        Interval::ratio(x, 2, 1);
        x.sqrt();
        x.add_si(1);
        x.log();
        x.reciprocal_times(e1);
        x.add_si(1);
        return x.common_floor();
    });
}

long edge_count_upper_bound(const Graph& g)
{
    return edge_count_upper_bound(g.num_edges());
}

BoundReport tau_bounds_report(long l)
{
    if (l < 16)
        throw InvalidArgument("bounds report needs l >= 16, got " + std::to_string(l));
    BoundReport r;
    r.l = l;
    r.q = l / 4;
    r.lower = k2l_threshold_lower_bound(l);
    r.upper_wqy = edge_count_upper_bound(static_cast<std::size_t>(2 * l));
    r.upper_thomassen = pow(l + 2, 10) + 1;
    return r;
}

} // namespace lcf
