#include "splitcone/edc.hpp"
#include "splitcone/xdiagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcone {

Split Facet::paired_split(int n) const
{
    switch (kind) {
    case Kind::Left:
        return Split{1, i};
    case Kind::Right:
        return Split{i, n};
    case Kind::Triangle:
        return Split{i, i};
    case Kind::Covering:
        return Split{i, j};
    }
    throw std::logic_error("unreachable");
}

Rat Facet::eval(const DissimilarityMatrix& d) const
{
    const int n = d.n;
    switch (kind) {
    case Kind::Left:
        return d.at(1, i + 1) - d.at(1, i);
    case Kind::Right:
        return d.at(i - 1, n) - d.at(i, n);
    case Kind::Triangle:
        return d.at(i - 1, i) + d.at(i, i + 1) - d.at(i - 1, i + 1);
    case Kind::Covering:
        return d.at(i, j + 1) + d.at(i - 1, j) - d.at(i, j) - d.at(i - 1, j + 1);
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> Facet::coefficients(int n) const
{
    std::vector<Rat> c(static_cast<size_t>(n) * (n - 1) / 2, Rat(0));
    auto add = [&](int a, int b, int v) {
        c[DissimilarityMatrix::index(n, std::min(a, b), std::max(a, b))] += v;
    };
    switch (kind) {
    case Kind::Left:
        add(1, i + 1, 1);
        add(1, i, -1);
        break;
    case Kind::Right:
        add(i - 1, n, 1);
        add(i, n, -1);
        break;
    case Kind::Triangle:
        add(i - 1, i, 1);
        add(i, i + 1, 1);
        add(i - 1, i + 1, -1);
        break;
    case Kind::Covering:
        add(i, j + 1, 1);
        add(i - 1, j, 1);
        add(i, j, -1);
        add(i - 1, j + 1, -1);
        break;
    }
    return c;
}

std::string Facet::to_string() const
{
    switch (kind) {
    case Kind::Left:
        return "Left(" + std::to_string(i) + ")";
    case Kind::Right:
        return "Right(" + std::to_string(i) + ")";
    case Kind::Triangle:
        return "Triangle(" + std::to_string(i) + ")";
    case Kind::Covering:
        return "Covering(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    throw std::logic_error("unreachable");
}

std::vector<Facet> facets(int n)
{
    if (n < 3)
        throw std::invalid_argument("facets: n >= 3 required (TooSmall)");
    std::vector<Facet> out;
    for (int i = 2; i <= n - 1; ++i)
        out.push_back(Facet{Facet::Kind::Left, i, 0});
    for (int i = 2; i <= n - 1; ++i)
        out.push_back(Facet{Facet::Kind::Right, i, 0});
    for (int i = 2; i <= n - 1; ++i)
        out.push_back(Facet{Facet::Kind::Triangle, i, 0});
    for (int i = 2; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            out.push_back(Facet{Facet::Kind::Covering, i, j});
    return out;
}

int RayTau::block_of(int x) const
{
    int b = 0;
    for (int c : cuts) {
        if (x <= c)
            return b;
        ++b;
    }
    return b;
}

std::vector<std::pair<int, int>> RayTau::blocks() const
{
    std::vector<std::pair<int, int>> bs;
    int lo = 1;
    for (int c : cuts) {
        bs.emplace_back(lo, c);
        lo = c + 1;
    }
    bs.emplace_back(lo, n);
    return bs;
}

std::string RayTau::to_string() const
{
    std::string s;
    for (auto [lo, hi] : blocks()) {
        if (!s.empty())
            s += "|";
        for (int x = lo; x <= hi; ++x)
            s += std::to_string(x);
    }
    return s;
}

DissimilarityMatrix ray_vector(const RayTau& t)
{
    DissimilarityMatrix d(t.n);
    for (int i = 1; i <= t.n; ++i)
        for (int j = i + 1; j <= t.n; ++j)
            if (t.block_of(i) != t.block_of(j))
                d.set(i, j, Rat(1));
    return d;
}

std::vector<RayTau> all_rays(int n)
{
    if (n < 2)
        throw std::invalid_argument("all_rays: n >= 2 required");
    std::vector<RayTau> rays;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        RayTau t;
        t.n = n;
        for (int c = 1; c <= n - 1; ++c)
            if (mask & (1u << (c - 1)))
                t.cuts.push_back(c);
        rays.push_back(std::move(t));
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

WeightVector recover_weights(const DissimilarityMatrix& d)
{
    const int n = d.n;
    if (n < 3)
        throw std::invalid_argument("recover_weights: n >= 3 required");
    WeightVector w = zero_weights(complete_system(n));
    auto set = [&](const Split& s, Rat v) {
        auto it = std::lower_bound(w.sys.splits.begin(), w.sys.splits.end(), s);
        w.weights[static_cast<size_t>(it - w.sys.splits.begin())] = std::move(v);
    };
    set(Split{1, 1}, d.at(1, 2) / 2);
    set(Split{n, n}, d.at(n - 1, n) / 2);
    for (const Facet& f : facets(n))
        set(f.paired_split(n), f.eval(d) / 2);
    return w;
}

std::vector<Facet> facet_incidence(const RayTau& t)
{
    // Exclusion rules: a facet fails to contain r_tau exactly when
    //   Left(i):       i,i+1 separated and 1,i together
    //   Right(i):      i-1,i separated and i,n together
    //   Triangle(i):   i separated from both neighbors
    //   Covering(i,j): i,j together, i-1,i separated, j,j+1 separated
    std::vector<Facet> out;
    auto together = [&](int a, int b) { return t.block_of(a) == t.block_of(b); };
    for (const Facet& f : facets(t.n)) {
        bool excluded = false;
        switch (f.kind) {
        case Facet::Kind::Left:
            excluded = !together(f.i, f.i + 1) && together(1, f.i);
            break;
        case Facet::Kind::Right:
            excluded = !together(f.i - 1, f.i) && together(f.i, t.n);
            break;
        case Facet::Kind::Triangle:
            excluded = !together(f.i - 1, f.i) && !together(f.i, f.i + 1);
            break;
        case Facet::Kind::Covering:
            excluded = together(f.i, f.j) && !together(f.i - 1, f.i) &&
                       !together(f.j, f.j + 1);
            break;
        }
        if (!excluded)
            out.push_back(f);
    }
    return out;
}

namespace {

// Splits of KN_n absent from sys, with their paired facets.
std::vector<Facet> absent_split_facets(const SplitSystem& sys)
{
    std::vector<Facet> out;
    for (const Facet& f : facets(sys.n))
        if (!sys.contains(f.paired_split(sys.n)))
            out.push_back(f);
    return out;
}

} // namespace

MembershipReport membership(const DissimilarityMatrix& d)
{
    return membership(d, complete_system(d.n));
}

MembershipReport membership(const DissimilarityMatrix& d, const SplitSystem& sys)
{
    const int n = d.n;
    if (sys.n != n)
        throw std::invalid_argument("membership: dimension mismatch");
    if (!sys.has_all_trivials())
        throw std::invalid_argument("membership: system must contain all trivial splits");

    MembershipReport rep;
    if (d.at(1, 2) < 0)
        rep.violations.push_back("delta(1,2) >= 0");
    if (d.at(n - 1, n) < 0)
        rep.violations.push_back("delta(" + std::to_string(n - 1) + "," +
                                 std::to_string(n) + ") >= 0");
    const SplitSystem kn = complete_system(n);
    const bool proper_face = !(sys.splits == kn.splits);
    bool all_strict = true;
    for (const Facet& f : facets(n)) {
        Rat v = f.eval(d);
        if (v < 0)
            rep.violations.push_back(f.to_string());
        else if (v == 0)
            all_strict = false;
        else if (proper_face && !sys.contains(f.paired_split(n)))
            rep.violations.push_back(f.to_string() + " must be tight on this face");
    }
    if (!rep.violations.empty()) {
        rep.status = MembershipReport::Status::Outside;
        return rep;
    }

    // Identify the minimal face: positive-weight splits plus all trivials.
    WeightVector w = recover_weights(d);
    std::vector<Split> face_splits;
    for (size_t k = 0; k < w.sys.splits.size(); ++k)
        if (w.sys.splits[k].is_trivial() || w.weights[k] > 0)
            face_splits.push_back(w.sys.splits[k]);
    rep.face = make_system(n, std::move(face_splits));
    rep.status = (all_strict && rep.face.splits == kn.splits)
                     ? MembershipReport::Status::Interior
                     : MembershipReport::Status::OnFace;
    return rep;
}

std::vector<RayTau> rays_of_face(const SplitSystem& sys)
{
    if (!sys.has_all_trivials())
        throw std::invalid_argument("rays_of_face: system must contain all trivial splits");
    const std::vector<Facet> must_be_tight = absent_split_facets(sys);
    std::vector<RayTau> out;
    for (const RayTau& t : all_rays(sys.n)) {
        // Rule-based incidence.
        const std::vector<Facet> inc = facet_incidence(t);
        auto on_facet = [&](const Facet& f) {
            return std::find(inc.begin(), inc.end(), f) != inc.end();
        };
        bool ok_rules = std::all_of(must_be_tight.begin(), must_be_tight.end(), on_facet);
        // Direct substitution.
        const DissimilarityMatrix r = ray_vector(t);
        bool ok_direct = std::all_of(must_be_tight.begin(), must_be_tight.end(),
                                     [&](const Facet& f) { return f.eval(r) == 0; });
        if (ok_rules != ok_direct)
            throw std::logic_error("rays_of_face: incidence rules disagree with substitution");
        if (ok_rules)
            out.push_back(t);
    }
    return out;
}

std::vector<DecompositionTerm> decompose(const DissimilarityMatrix& d)
{
    const int n = d.n;
    if (membership(d).status == MembershipReport::Status::Outside)
        throw std::domain_error("decompose: point is outside the cone (NotInCone)");

    std::vector<DecompositionTerm> terms;
    DissimilarityMatrix y = d;
    const std::vector<Facet> fs = facets(n);
    const size_t max_terms = static_cast<size_t>(n) * (n - 1) / 2 + 2;
    while (!y.is_zero()) {
        std::optional<RayTau> tau = ray_for_tight_set(xdiagram_of(y));
        if (!tau)
            throw std::logic_error("decompose: nonzero residual mapped to the zero ray");
        const DissimilarityMatrix r = ray_vector(*tau);
        // Largest feasible step: ratios over the strictly decreasing
        // constraints (facets plus the two end coordinates).
        std::optional<Rat> lambda;
        auto cap = [&](const Rat& num, const Rat& den) {
            Rat ratio = num / den;
            if (!lambda || ratio < *lambda)
                lambda = ratio;
        };
        for (const Facet& f : fs) {
            Rat fr = f.eval(r);
            if (fr > 0)
                cap(f.eval(y), fr);
        }
        if (r.at(1, 2) > 0)
            cap(y.at(1, 2), r.at(1, 2));
        if (r.at(n - 1, n) > 0)
            cap(y.at(n - 1, n), r.at(n - 1, n));
        if (!lambda || *lambda <= 0)
            throw std::logic_error("decompose: no positive step available");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                y.set(i, j, y.at(i, j) - *lambda * r.at(i, j));
        terms.push_back(DecompositionTerm{*lambda, *tau});
        if (terms.size() > max_terms)
            throw std::logic_error("decompose: step bound exceeded");
    }
    return terms;
}

} // namespace splitcone
