#include "fibrecoin/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace fibrecoin {

std::string symbol(BundleSpace space)
{
    return space == BundleSpace::Torus ? "T" : "K";
}

BundleSpace parse_space(const std::string& text)
{
    std::string lower;
    lower.reserve(text.size());
    for (char c : text)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "t" || lower == "torus")
        return BundleSpace::Torus;
    if (lower == "k" || lower == "klein")
        return BundleSpace::Klein;
    throw ContractViolation("unknown bundle space '" + text + "' (expected T or K)");
}

Rational glue_angle(BundleSpace space, const Rational& theta)
{
    return space == BundleSpace::Torus ? mod_one(theta) : mod_one(-theta);
}

BundlePoint::BundlePoint(BundleSpace space, const Rational& t, const Rational& theta)
    : space_(space), t_(mod_one(t)), theta_(mod_one(theta))
{
    // Each whole turn around the base passes through the gluing once.
    const std::int64_t turns = floor_of(t);
    if (space == BundleSpace::Klein && (turns % 2 != 0))
        theta_ = mod_one(-theta);
}

std::string to_string(const BundlePoint& p)
{
    return symbol(p.space()) + "(" + to_string(p.t()) + ", " + to_string(p.theta()) + ")";
}

SectionMap section(BundleSpace space, Epsilon epsilon)
{
    const Rational level = epsilon == Epsilon::Plus ? Rational(0) : Rational(1, 2);
    return [space, level](const Rational& t) { return BundlePoint(space, t, level); };
}

FiberMapClass::FiberMapClass(BundleSpace domain, BundleSpace codomain, std::int64_t q, std::int64_t r)
    : domain_(domain), codomain_(codomain), q_(q), r_(r)
{
    if (domain != codomain && q != 0)
        throw ContractViolation("maps between different bundles have fibre degree 0, got q = " +
                                std::to_string(q));
    if (codomain == BundleSpace::Klein)
        r_ = mod_floor(r, 2);
}

FiberMapClass FiberMapClass::identity(BundleSpace space)
{
    return FiberMapClass(space, space, 1, 0);
}

FiberMapClass FiberMapClass::constant_section(BundleSpace domain, BundleSpace codomain, Epsilon epsilon)
{
    if (epsilon == Epsilon::Plus)
        return FiberMapClass(domain, codomain, 0, 0);
    // s_{-1} o p is the fibrewise product of s_{+1} o p with -1. Into T it
    // is homotopic over the base to s_{+1} o p.
    return FiberMapClass(domain, codomain, 0, codomain == BundleSpace::Klein ? 1 : 0);
}

std::string to_string(const FiberMapClass& f)
{
    return "(" + symbol(f.domain()) + "," + symbol(f.codomain()) + ",q=" + std::to_string(f.q()) +
           ",r=" + std::to_string(f.r()) + ")";
}

namespace {

void require_same_bundles(const FiberMapClass& f, const FiberMapClass& g, const char* what)
{
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        throw ContractViolation(std::string(what) + ": classes " + to_string(f) + " and " + to_string(g) +
                                " do not share domain and codomain");
}

}  // namespace

MapPair::MapPair(FiberMapClass f1, FiberMapClass f2)
    : f1_(f1), f2_(f2), q_(0), r_(0)
{
    require_same_bundles(f1_, f2_, "MapPair");
    q_ = f1_.q() - f2_.q();
    r_ = f1_.r() - f2_.r();
    if (codomain() == BundleSpace::Klein)
        r_ = mod_floor(r_, 2);
}

MapPair MapPair::from_difference(BundleSpace domain, BundleSpace codomain, std::int64_t q, std::int64_t r)
{
    return MapPair(FiberMapClass(domain, codomain, q, r),
                   FiberMapClass::constant_section(domain, codomain, Epsilon::Plus));
}

StandardMap::StandardMap(FiberMapClass cls) : cls_(cls) {}

BundlePoint StandardMap::at_chart(const Rational& t, const Rational& theta) const
{
    const Rational fibre = Rational(cls_.q()) * theta;
    if (cls_.codomain() == BundleSpace::Torus)
        return BundlePoint(BundleSpace::Torus, t, Rational(cls_.r()) * t + fibre);
    return BundlePoint(BundleSpace::Klein, t, Rational(cls_.r(), 2) + fibre);
}

BundlePoint StandardMap::operator()(const BundlePoint& x) const
{
    if (x.space() != cls_.domain())
        throw ContractViolation("standard map " + to_string(cls_) + " evaluated at " + to_string(x));
    return at_chart(x.t(), x.theta());
}

StandardMap standard_map(const FiberMapClass& cls)
{
    return StandardMap(cls);
}

namespace {

struct LiftedPath {
    Rational total;     // lifted end value minus lifted start value
    Rational max_step;  // largest |increment| seen
};

// Sums centred increments along values[0], ..., values[n-1], closing.
LiftedPath lift(const std::vector<Rational>& values, const Rational& closing)
{
    LiftedPath out{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Rational& next = (i + 1 < values.size()) ? values[i + 1] : closing;
        const Rational step = centered_mod_one(next - values[i]);
        out.total += step;
        const Rational magnitude = step < 0 ? -step : step;
        out.max_step = std::max(out.max_step, magnitude);
    }
    return out;
}

BundlePoint checked_eval(const PointMap& f, const BundlePoint& x, BundleSpace codomain)
{
    const BundlePoint y = f(x);
    if (y.space() != codomain)
        throw ContractViolation("evaluator leaves the declared codomain at " + to_string(x));
    if (y.t() != x.t())
        throw ContractViolation("evaluator is not fibre-preserving: " + to_string(x) + " -> " + to_string(y));
    return y;
}

void require_fine_sampling(const LiftedPath& path, const char* loop)
{
    if (path.max_step >= Rational(1, 4))
        throw ContractViolation(std::string("sampling too coarse to certify the winding of ") + loop +
                                "; raise degree_bound");
}

}  // namespace

FibreInvariants extract_invariants(const PointMap& evaluator, BundleSpace domain, BundleSpace codomain,
                                   std::int64_t degree_bound)
{
    if (degree_bound < 1)
        throw ContractViolation("extract_invariants: degree_bound must be positive");
    const std::int64_t samples = 4 * degree_bound + 1;

    // Fibre degree: the loop theta -> f(0, theta) in the fibre over t = 0.
    std::vector<Rational> fibre;
    fibre.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t j = 0; j < samples; ++j)
        fibre.push_back(checked_eval(evaluator, BundlePoint(domain, 0, Rational(j, samples)), codomain).theta());
    const LiftedPath fibre_path = lift(fibre, fibre.front());
    require_fine_sampling(fibre_path, "the fibre loop");
    const std::int64_t q = fibre_path.total.numerator();

    // Section winding: t -> f(s_{+1}(t)). The chart value at t = 1 is the
    // codomain gluing applied to the value at t = 0.
    std::vector<Rational> along;
    along.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t j = 0; j < samples; ++j)
        along.push_back(checked_eval(evaluator, BundlePoint(domain, Rational(j, samples), 0), codomain).theta());
    const Rational start = along.front();
    const LiftedPath section_path = lift(along, glue_angle(codomain, start));
    require_fine_sampling(section_path, "the section loop");

    std::int64_t r = 0;
    if (codomain == BundleSpace::Torus) {
        r = section_path.total.numerator();
    } else {
        // A section of K lifts to a path with theta(1) + theta(0) integral;
        // that integer mod 2 separates s_{+1} from s_{-1}.
        const Rational ends = start + (start + section_path.total);
        r = mod_floor(ends.numerator(), 2);
    }
    return FibreInvariants{q, r};
}

FiberMapClass fibrewise_multiply(const FiberMapClass& f, const FiberMapClass& g)
{
    require_same_bundles(f, g, "fibrewise_multiply");
    return FiberMapClass(f.domain(), f.codomain(), f.q() + g.q(), f.r() + g.r());
}

FiberMapClass fibrewise_inverse(const FiberMapClass& f)
{
    return FiberMapClass(f.domain(), f.codomain(), -f.q(), -f.r());
}

MapPair reduce_pair(const MapPair& pair)
{
    const FiberMapClass f = fibrewise_multiply(pair.f1(), fibrewise_inverse(pair.f2()));
    return MapPair(f, FiberMapClass::constant_section(pair.domain(), pair.codomain(), Epsilon::Plus));
}

bool homotopic_over_base(const FiberMapClass& f, const FiberMapClass& g)
{
    require_same_bundles(f, g, "homotopic_over_base");
    return f.q() == g.q() && f.r() == g.r();
}

}  // namespace fibrecoin
