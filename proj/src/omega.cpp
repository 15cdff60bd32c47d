#include "fibrecoin/omega.hpp"

#include "fibrecoin/nielsen.hpp"

namespace fibrecoin {

namespace {

std::string summand_name(Summand s)
{
    switch (s) {
    case Summand::Zero:
        return "0";
    case Summand::Z:
        return "Z";
    case Summand::Z2:
        return "Z2";
    }
    return "?";
}

void require_in(Summand s, std::int64_t value, const char* component)
{
    if (s == Summand::Z2 && value != 0 && value != 1)
        throw ContractViolation(std::string("omega component ") + component + " = " + std::to_string(value) +
                                " is not a residue mod 2");
}

}  // namespace

std::string to_string(const OmegaGroupDescriptor& g)
{
    return summand_name(g.summands[0]) + "+" + summand_name(g.summands[1]) + "+" + summand_name(g.summands[2]);
}

OmegaGroupDescriptor omega_group(BundleSpace domain, BundleSpace codomain)
{
    using enum Summand;
    const bool torus_domain = domain == BundleSpace::Torus;
    const bool torus_codomain = codomain == BundleSpace::Torus;
    if (torus_domain && torus_codomain)
        return {domain, codomain, {Z, Z, Z2}};
    if (!torus_domain && !torus_codomain)
        return {domain, codomain, {Z, Z2, Z2}};
    if (!torus_domain)
        return {domain, codomain, {Zero, Z, Z2}};
    return {domain, codomain, {Zero, Z2, Z2}};
}

OmegaClass::OmegaClass(OmegaGroupDescriptor group, std::optional<std::int64_t> c1, std::int64_t c2,
                       std::int64_t c3)
    : group_(group), c1_(c1), c2_(c2), c3_(c3)
{
    if (group_.summands[0] == Summand::Zero && c1_)
        throw ContractViolation("omega component c1 must be trivial in " + to_string(group_));
    if (group_.summands[0] != Summand::Zero && !c1_)
        throw ContractViolation("omega component c1 is required in " + to_string(group_));
    if (c1_)
        require_in(group_.summands[0], *c1_, "c1");
    require_in(group_.summands[1], c2_, "c2");
    require_in(group_.summands[2], c3_, "c3");
}

OmegaClass OmegaClass::zero(const OmegaGroupDescriptor& group)
{
    std::optional<std::int64_t> c1;
    if (group.summands[0] != Summand::Zero)
        c1 = 0;
    return OmegaClass(group, c1, 0, 0);
}

bool OmegaClass::is_zero() const
{
    return c1_.value_or(0) == 0 && c2_ == 0 && c3_ == 0;
}

std::string to_string(const OmegaClass& w)
{
    const std::string first = w.c1() ? std::to_string(*w.c1()) : std::string("0*");
    return "(" + first + ", " + std::to_string(w.c2()) + ", " + std::to_string(w.c3()) + ")";
}

std::int64_t rho2(std::int64_t n)
{
    return mod_floor(n, 2);
}

OmegaClass omega_class(const MapPair& pair)
{
    const auto group = omega_group(pair.domain(), pair.codomain());
    const std::int64_t q = pair.q();
    const std::int64_t r = pair.r();
    const std::int64_t c3 = rho2(static_cast<std::int64_t>(nielsen_number(pair)));

    std::optional<std::int64_t> c1;
    if (group.summands[0] == Summand::Z)
        c1 = q;

    std::int64_t c2 = r;
    if (pair.domain() == BundleSpace::Klein && pair.codomain() == BundleSpace::Klein)
        c2 = rho2(r + 1 + rho2(q));
    else if (pair.domain() == BundleSpace::Torus && pair.codomain() == BundleSpace::Klein)
        c2 = rho2(r + 1);
    return OmegaClass(group, c1, c2, c3);
}

OmegaClass root_invariant(const FiberMapClass& f)
{
    return omega_class(
        MapPair(f, FiberMapClass::constant_section(f.domain(), f.codomain(), Epsilon::Plus)));
}

FibreInvariants recover_pair_invariants(const OmegaClass& w)
{
    const auto& g = w.group();
    const std::int64_t q = w.c1().value_or(0);
    std::int64_t r = w.c2();
    if (g.domain == BundleSpace::Klein && g.codomain == BundleSpace::Klein)
        r = rho2(w.c2() + 1 + rho2(q));
    else if (g.domain == BundleSpace::Torus && g.codomain == BundleSpace::Klein)
        r = rho2(w.c2() + 1);

    const MapPair pair = MapPair::from_difference(g.domain, g.codomain, q, r);
    const std::int64_t expected = rho2(static_cast<std::int64_t>(nielsen_number(pair)));
    if (w.c3() != expected)
        throw InconsistentClass("omega class " + to_string(w) + " in " + to_string(g) + " encodes (q, r) = (" +
                                std::to_string(q) + ", " + std::to_string(r) + "), which forces c3 = " +
                                std::to_string(expected));
    return FibreInvariants{q, r};
}

HurewiczImage hurewicz_truncation(const OmegaClass& w)
{
    return HurewiczImage{w.c1(), w.c2()};
}

DoldIndexComponents dold_index_components(const FiberMapClass& f)
{
    if (f.domain() != f.codomain())
        throw ContractViolation("dold_index_components: " + to_string(f) + " is not a self-map");
    const MapPair pair(FiberMapClass::identity(f.domain()), f);
    return DoldIndexComponents{pair.q(), rho2(static_cast<std::int64_t>(nielsen_number(pair)))};
}

}  // namespace fibrecoin
