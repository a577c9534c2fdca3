// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "kblocked/blocked.hpp"
#include "kblocked/constructions.hpp"
#include "kblocked/search.hpp"
#include "kblocked/visibility.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace kblocked;

namespace {

struct Verdict
{
    bool ok = true;
    std::string detail;
};

struct Criterion
{
    int id;
    const char* title;
    double limit_seconds;
    std::function<Verdict()> run;
};

// Collects failures; the first few go into the detail line.
class Checker
{
public:
    void expect(bool cond, const std::string& what)
    {
        ++checks_;
        if (cond) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    Verdict verdict(const std::string& summary) const
    {
        if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
        return {false, std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed: " + notes_.str()};
    }

private:
    int checks_ = 0;
    int failures_ = 0;
    std::ostringstream notes_;
};

std::set<KSetSignature> with_k(const std::set<KSetSignature>& sigs, std::size_t k)
{
    std::set<KSetSignature> out;
    for (const auto& s : sigs)
        if (s.k() == k) out.insert(s);
    return out;
}

std::string join(const std::set<KSetSignature>& sigs)
{
    std::string out;
    for (const auto& s : sigs) out += (out.empty() ? "" : " ") + s.to_string();
    return out;
}

bool collinear_set(const ColouredPointSet& set)
{
    for (std::size_t i = 2; i < set.size(); ++i)
        if (testsupport::cross_sign(set.config()[0], set.config()[1], set.config()[i]) != 0) return false;
    return true;
}

// Every 4-blocked set the repository stores or derives by augmentation.
std::vector<std::pair<std::string, ColouredPointSet>> four_blocked_sets()
{
    std::vector<std::pair<std::string, ColouredPointSet>> out;
    for (const auto& name : canonical_names()) {
        auto set = canonical(name);
        if (set.colour_count() == 4) out.emplace_back(name, set);
        if (set.colour_count() != 3) continue;
        for (int m = 1; m <= 3; ++m) out.emplace_back("augment(" + name + "," + std::to_string(m) + ")", augment(set, m));
    }
    return out;
}

Verdict grid_family()
{
    Checker c;
    auto g1 = grid_3d(1), g2 = grid_3d(2);
    auto flat = occlusion_free_projection(grid_3d(3).config(), 0);
    ColouredPointSet g3(flat.image, grid_3d(3).colours());
    const std::pair<const ColouredPointSet*, KSetSignature> cases[] = {
        {&g1, KSetSignature({2, 1})},
        {&g2, KSetSignature({4, 2, 2, 1})},
        {&g3, KSetSignature({8, 4, 4, 4, 2, 2, 2, 1})}};
    std::string sigs;
    for (const auto& [set, expect] : cases) {
        auto r = verify_blocked(*set);
        c.expect(r.ok && r.signature == expect, "signature of " + std::to_string(set->size()) + "-point grid");
        c.expect(r.ok && verify_midpoint_blocked(*set).ok, "midpoint-blocked " + std::to_string(set->size()));
        if (r.ok) sigs += r.signature->to_string() + " ";
    }
    return c.verdict(sigs + "projected plane image in dim " + std::to_string(g3.dim()));
}

Verdict small_class_characterisation()
{
    SearchSpec spec;
    spec.x_max = 4;
    spec.y_max = 4;
    spec.max_points = 6;
    auto out = enumerate_blocked(spec);
    Checker c;
    c.expect(out.status == SearchStatus::Exhausted, "status " + to_string(out.status));
    auto k2 = with_k(out.signatures_found, 2), k3 = with_k(out.signatures_found, 3);
    c.expect(k2 == std::set<KSetSignature>{KSetSignature({1, 1}), KSetSignature({2, 1})}, "k=2 set: " + join(k2));
    c.expect(k3 == std::set<KSetSignature>{KSetSignature({1, 1, 1}), KSetSignature({2, 1, 1}), KSetSignature({2, 2, 1}),
                                           KSetSignature({2, 2, 2})},
             "k=3 set: " + join(k3));
    return c.verdict("k=2 " + join(k2) + "; k=3 " + join(k3) + "; " + std::to_string(out.nodes_explored) + " nodes");
}

Verdict absent_3331()
{
    SearchSpec spec;
    spec.x_max = 4;
    spec.y_max = 4;
    spec.max_points = 10;
    auto out = certify_absent(KSetSignature({3, 3, 3, 1}), spec);
    Checker c;
    c.expect(out.status == SearchStatus::Exhausted, "status " + to_string(out.status));
    c.expect(out.witnesses.empty(), std::to_string(out.witnesses.size()) + " witnesses");
    return c.verdict("exhausted, 0 witnesses, " + std::to_string(out.nodes_explored) +
                     " nodes (grid-bounded evidence)");
}

Verdict audits()
{
    Checker c;
    auto sets = four_blocked_sets();
    for (const auto& [name, set] : sets) {
        auto a = audit_lemmas(set);
        c.expect(a.all_pass(), name + " audit");
        c.expect(set.size() <= 12, name + " size");
        auto sig = signature(set).sizes();
        bool allowed = sig == std::vector<int>{4, 2, 2, 1} || sig == std::vector<int>{4, 2, 2, 2} ||
                         (sig[0] <= 3 && sig != std::vector<int>{3, 3, 3, 1});
        c.expect(allowed, name + " signature " + signature(set).to_string());
    }
    return c.verdict(std::to_string(sets.size()) + " four-class sets audited");
}

Verdict witnesses12()
{
    Checker c;
    auto k3333 = canonical("K3333");
    c.expect(k3333.size() == 12, "K3333 size");
    c.expect(verify_blocked(k3333).signature == KSetSignature({3, 3, 3, 3}), "K3333 signature");
    c.expect(verify_midpoint_blocked(k3333).ok, "K3333 midpoint");
    c.expect(audit_lemmas(k3333).all_pass(), "K3333 audit");
    auto k4222 = canonical("K4222");
    c.expect(k4222.size() == 10 && verify_blocked(k4222).signature == KSetSignature({4, 2, 2, 2}), "K4222");
    c.expect(audit_lemmas(k4222).all_pass(), "K4222 audit");
    auto k4221 = canonical("K4221");
    c.expect(k4221.size() == 9 && verify_blocked(k4221).signature == KSetSignature({4, 2, 2, 1}), "K4221");
    c.expect(audit_lemmas(k4221).all_pass(), "K4221 audit");
    return c.verdict("{3,3,3,3} midpoint-blocked on 12 points, {4,2,2,2} on 10, {4,2,2,1} on 9");
}

Verdict product_law()
{
    Checker c;
    std::vector<std::string> names;
    for (const auto& name : canonical_names())
        if (verify_midpoint_blocked(canonical(name)).ok) names.push_back(name);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = names[pick(rng)], b = names[pick(rng)];
        auto x = canonical(a), y = canonical(b);
        auto p = product(x, y);
        c.expect(signature(p).sizes() == testsupport::product_sizes(signature(x).sizes(), signature(y).sizes()),
                 a + " x " + b);
        c.expect(verify_midpoint_blocked(p).ok, a + " x " + b + " midpoint");
    }
    auto g4 = product(grid_3d(2), grid_3d(2));
    c.expect(g4.size() == 81, "[3]^4 size");
    c.expect(signature(g4).sizes() == testsupport::grid_signature(4), "[3]^4 signature " + signature(g4).to_string());
    auto sq = power(canonical("K3333"), 2);
    c.expect(sq.size() == 144, "K3333^2 size");
    c.expect(sq.colour_count() == 16, "K3333^2 classes");
    c.expect(verify_blocked(sq).ok, "K3333^2 blocked");
    return c.verdict("10 seeded pairs over " + std::to_string(names.size()) + " midpoint-blocked sets; " +
                     signature(g4).to_string() + "; K3333^2 has 144 points, 16 classes");
}

Verdict turan()
{
    Checker c;
    for (int k = 3; k <= 6; ++k)
        for (int n = 2; n <= 5; ++n) {
            auto r = verify_line_cover(turan_lines(k, n));
            std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
            c.expect(r.all_pass(), tag + " bullets");
            c.expect(r.pairs_covered == static_cast<std::size_t>(testsupport::binomial(k * n, 2)), tag + " pair count");
        }
    return c.verdict("16 covers, all bullets, C(kn,2) pairs each");
}

Verdict empty_polygons()
{
    Checker c;
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = testsupport::random_general_position(rng, 10, 20);
        auto five = find_empty_convex_polygon(p, 5);
        c.expect(five.has_value(), "10-point set without pentagon, trial " + std::to_string(trial));
        c.expect(five.has_value() == testsupport::has_empty_convex_subset(p, 5), "oracle disagrees (r=5)");
        if (five) c.expect(testsupport::empty_convex_subset(p, *five), "returned pentagon not empty/convex");
    }
    for (int trial = 0; trial < 50; ++trial) {
        auto p = testsupport::random_general_position(rng, 5, 20);
        auto four = find_empty_convex_polygon(p, 4);
        c.expect(four.has_value(), "5-point set without quadrilateral, trial " + std::to_string(trial));
        c.expect(four.has_value() == testsupport::has_empty_convex_subset(p, 4), "oracle disagrees (r=4)");
        if (four) c.expect(testsupport::empty_convex_subset(p, *four), "returned quadrilateral not empty/convex");
    }
    return c.verdict("50 pentagons in 10-point sets, 50 quadrilaterals in 5-point sets, oracle agrees");
}

Verdict augmentation()
{
    Checker c;
    int built = 0;
    for (const auto& name : canonical_names()) {
        auto set = canonical(name);
        for (int m = 1; m <= 3; ++m) {
            if (m == 3 && collinear_set(set)) continue;
            auto out = augment(set, m);
            auto expect = signature(set).sizes();
            expect.push_back(m);
            auto r = verify_blocked(out);
            c.expect(r.ok && r.signature == KSetSignature(expect), name + " + " + std::to_string(m));
            ++built;
        }
    }
    for (const char* row : {"K222", "K111"})
        for (int m = 1; m <= 3; ++m) {
            auto out = augment(canonical(row), m);
            auto expect = signature(canonical(row)).sizes();
            expect.push_back(m);
            c.expect(signature(out) == KSetSignature(expect), std::string(row) + " table row, x=" + std::to_string(m));
        }
    return c.verdict(std::to_string(built) + " augmentations including rows {2,2,2,x} and {1,1,1,x}");
}

Verdict oracle_equivalence()
{
    Checker c;
    int multipartite = 0, graphs = 0;
    auto check = [&](const PointConfig& p, const std::string& tag) {
        ++graphs;
        c.expect(visibility_graph(p) == brute_force_visibility(p), tag + " graph");
        try {
            auto set = infer_colouring(p);
            ++multipartite;
            c.expect(verify_blocked(set).ok, tag + " round trip");
        } catch (const NotMultipartite&) {
            c.expect(testsupport::multipartite_signature(p).empty(), tag + " wrongly rejected");
        }
    };
    for (const auto& name : canonical_names()) check(canonical(name).config(), name);
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 14;
        long range = trial % 3 == 0 && n <= 9 ? 1 : 3;
        check(testsupport::random_config(rng, n, 2, range), "random " + std::to_string(trial));
    }
    return c.verdict(std::to_string(graphs) + " graphs, " + std::to_string(multipartite) + " multipartite round trips");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "grid-family verification", 1.0, grid_family},
        {2, "two- and three-class characterisation by enumeration", 300.0, small_class_characterisation},
        {3, "{3,3,3,1} absent on grid (4,4)", 600.0, absent_3331},
        {4, "structural audit of four-class sets", 1.0, audits},
        {5, "12-point, 10-point and 9-point witnesses", 1.0, witnesses12},
        {6, "product law and powers", 30.0, product_law},
        {7, "Turán line covers", 5.0, turan},
        {8, "empty convex polygons", 30.0, empty_polygons},
        {9, "augmentation", 10.0, augmentation},
        {10, "visibility oracle equivalence", 30.0, oracle_equivalence},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = cr.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds) {
            v.ok = false;
            v.detail += "; over time limit";
        }
        std::printf("[%s] criterion %2d: %s (%.3f s, limit %.0f s): %s\n", v.ok ? "PASS" : "FAIL", cr.id, cr.title, secs,
                    cr.limit_seconds, v.detail.c_str());
        failed += !v.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
