#include "orbitfin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "orbitfin/gallery.hpp"

namespace orbitfin::verify {

namespace g = orbitfin::gallery;

namespace {

using Clock = std::chrono::steady_clock;

// Portable draw in [lo, hi]; the engine's output sequence is fixed by the standard.
int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

class Runner {
public:
    explicit Runner(std::string suite) { report_.suite = std::move(suite); }

    // `body` returns the details; a thrown exception or a false `ok` fails the check.
    void check(const std::string& id, const std::function<bool(std::string&)>& body) {
        Check c{id, Status::Pass, {}, 0};
        const auto start = Clock::now();
        try {
            c.status = body(c.details) ? Status::Pass : Status::Fail;
        } catch (const std::exception& e) {
            c.status = Status::Fail;
            c.details = std::string("exception: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        report_.checks.push_back(std::move(c));
    }

    Report take() { return std::move(report_); }

private:
    Report report_;
};

std::string join_counts(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SampledStructure sample_on(const DefStructure& d, int atoms, const std::optional<std::vector<int>>& labels = {}) {
    return sample(d, make_sample(d.base(), atoms, labels));
}

Report hom_equivalence(const Options&) {
    Runner run("hom-equivalence");
    const DefStructure X = g::build_X();
    const DefStructure Y = g::build_Y().total;
    for (int n = 2; n <= 6; ++n) {
        run.check("h-homomorphism-" + std::to_string(n) + "-atoms", [&](std::string& details) {
            const auto sx = sample_on(X, n), sy = sample_on(Y, n);
            const Hom h = Hom::validated(sx.structure, sy.structure, g::hom_X_to_Y_map(sx, sy));
            // Y is the part of X on increasing pairs: include it back as an embedding.
            std::vector<int> incl(sy.size());
            for (std::size_t p = 0; p < sy.size(); ++p)
                incl[p] = *sx.find(g::x_sort(sy.point_sort[p], true), sy.point_support[p]);
            Hom::validated(sy.structure, sx.structure, incl, HomMode::Embedding);
            details = std::to_string(sx.size()) + " points of X onto " + std::to_string(sy.size()) + " points of Y";
            return h.size() == sx.size();
        });
    }
    return run.take();
}

Report covering(const Options&) {
    Runner run("covering");
    const auto cover = g::build_Y();
    for (int n = 2; n <= 5; ++n) {
        const std::string tag = std::to_string(n) + "-atoms";
        const auto sy = sample_on(cover.total, n);
        const auto sj = sample_on(cover.base, n);
        run.check("fibers-" + tag, [&](std::string& details) {
            const auto proj = g::projection(sy, sj);
            std::vector<int> count(sj.size(), 0);
            for (int v : proj) ++count[v];
            details = std::to_string(sj.size()) + " fibers";
            return std::all_of(count.begin(), count.end(), [](int c) { return c == 4; });
        });
        run.check("kernel-" + tag, [&](std::string&) { return g::kernel_check(sy); });
        run.check("lifts-" + tag, [&](std::string& details) {
            std::size_t k = 0;
            for (const auto& alpha : all_permutations(n)) {
                const auto lift = g::lift_atom_permutation(sy, alpha);
                Hom::validated(sy.structure, sy.structure, lift, HomMode::Iso);
                const Hom mu = g::mu_pi(sy, sj, lift);
                if (mu.map() != g::induced_base_map(sj, alpha)) return false;
                ++k;
            }
            details = std::to_string(k) + " lifts are automorphisms inducing the pair action";
            return true;
        });
        run.check("flips-" + tag, [&](std::string& details) {
            std::vector<std::vector<int>> vertices(sj.point_support.begin(), sj.point_support.end());
            const std::size_t subsets = std::size_t{1} << vertices.size();
            const std::size_t step = subsets > 256 ? subsets / 256 : 1;
            std::size_t tested = 0;
            std::vector<int> id(sj.size());
            std::iota(id.begin(), id.end(), 0);
            for (std::size_t mask = 0; mask < subsets; mask += step) {
                std::set<std::vector<int>> S;
                for (std::size_t v = 0; v < vertices.size(); ++v)
                    if (mask >> v & 1) S.insert(vertices[v]);
                for (int k = 0; k < 4; ++k) {
                    const auto f = g::flip(sy, S, k);
                    if (g::mu_pi(sy, sj, f).map() != id) return false;
                    if (k % 2 == 0 && !is_hom(sy.structure, sy.structure, f, HomMode::Iso)) return false;
                }
                ++tested;
            }
            details = std::to_string(tested) + " vertex sets; exponent 2 flips are automorphisms, all flips induce id";
            return true;
        });
    }
    return run.take();
}

Report johnson_core(const Options& opt) {
    Runner run("johnson-core");
    const DefStructure J = g::johnson();
    for (int n = 3; n <= 5; ++n) {
        run.check("endomorphisms-" + std::to_string(n) + "-atoms", [&](std::string& details) {
            const auto s = sample_on(J, n);
            const auto endos = enumerate_endos(s.structure, std::nullopt, opt.limits.threads);
            std::set<std::vector<int>> induced;
            for (const auto& alpha : all_permutations(n)) induced.insert(g::induced_base_map(s, alpha));
            std::set<std::vector<int>> found;
            std::size_t autos = 0;
            for (const auto& e : endos) {
                found.insert(e.map());
                if (is_hom(s.structure, s.structure, e.map(), HomMode::Iso)) ++autos;
            }
            const bool core = is_core(s.structure);
            details = std::to_string(endos.size()) + " endomorphisms, " + std::to_string(autos) + " automorphisms, " +
                      std::to_string(induced.size()) + " induced by atom permutations, core=" + (core ? "yes" : "no");
            if (n < 5) return core && std::includes(found.begin(), found.end(), induced.begin(), induced.end());
            return core && found == induced && autos == endos.size() && endos.size() == 120;
        });
    }
    return run.take();
}

Report involution(const Options&) {
    Runner run("involution");
    for (int n : {3, 4}) {
        run.check("Y-" + std::to_string(n) + "-atoms", [&](std::string& details) {
            const auto r = g::involution_commutation_check(n);
            details = "group order " + std::to_string(r.group_order) + ", " + std::to_string(r.involutions) +
                      " involutions, commute=" + (r.all_commute ? "yes" : "no") + ", flips=" + (r.all_flips ? "yes" : "no");
            return r.all_commute && r.all_flips;
        });
    }
    run.check("X-control-3-atoms", [&](std::string& details) {
        const auto r = g::involution_commutation_check_X(3);
        details = "group order " + std::to_string(r.group_order) + ", " + std::to_string(r.involutions) +
                  " involutions, commute=" + (r.all_commute ? "yes" : "no");
        return !r.all_commute && r.non_commuting.has_value();
    });
    return run.take();
}

Report spider(const Options&) {
    Runner run("spider");
    for (int n = 2; n <= 4; ++n) {
        run.check("core-" + std::to_string(n), [&](std::string& details) {
            const FinStructure s = g::build_spider(n);
            const CoreResult c = compute_core(s);
            Hom::validated(s, s, g::spider_collapse(n));
            details = std::to_string(c.core.size()) + " of " + std::to_string(s.size()) + " elements";
            return c.core.size() == 2 * n + 1 && is_core(c.core);
        });
    }
    return run.take();
}

Report growth(const Options& opt) {
    Runner run("growth");
    const Limits lim = opt.limits;
    run.check("DLO", [&](std::string& details) {
        std::vector<std::size_t> v;
        for (int n = 1; n <= 8; ++n) v.push_back(unlabelled_growth(g::dlo(), n, GrowthMode::Base, lim));
        details = join_counts(v);
        return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 1; });
    });
    run.check("QST", [&](std::string& details) {
        std::vector<std::size_t> v;
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            v.push_back(unlabelled_growth(g::build_QST(), n, GrowthMode::Base, lim));
            ok = ok && v.back() == (std::size_t{1} << n);
        }
        details = join_counts(v);
        return ok;
    });
    std::vector<std::size_t> s2;
    run.check("S2", [&](std::string& details) {
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            s2.push_back(unlabelled_growth(g::build_S2(), n, GrowthMode::Homogeneous, lim));
            ok = ok && s2.back() == local_order_growth_formula(n);
        }
        details = join_counts(s2);
        return ok;
    });
    run.check("Betw", [&](std::string& details) {
        std::vector<std::size_t> v;
        bool ok = s2.size() == 8;
        for (int n = 1; n <= 8; ++n) {
            v.push_back(growth_up_to_reversal(g::build_S2(), n, lim));
            ok = ok && v.back() <= s2[n - 1];
        }
        std::ostringstream ratio;
        ratio.precision(3);
        if (ok) ratio << static_cast<double>(v.back()) / static_cast<double>(s2.back());
        details = join_counts(v) + "; ratio at n=8: " + ratio.str();
        // Each class holds a type and its converse, so u(S2)/2 <= u(Betw) <= u(S2).
        for (int n = 1; n <= 8 && ok; ++n) ok = 2 * v[n - 1] >= s2[n - 1];
        return ok && v.back() < s2.back();
    });
    run.check("Betw-induced-types", [&](std::string& details) {
        std::vector<std::size_t> direct, quotient;
        for (int n = 1; n <= 8; ++n) {
            direct.push_back(unlabelled_growth(g::build_betw(), n, GrowthMode::Homogeneous, lim));
            quotient.push_back(growth_up_to_reversal(g::build_S2(), n, lim));
        }
        details = "ternary types " + join_counts(direct) + (direct == quotient ? " (equal to the quotient)" : "");
        for (int n = 0; n < 8; ++n)
            if (direct[n] > quotient[n]) return false;
        return true;
    });
    return run.take();
}

Report order_classification(const Options& opt) {
    Runner run("order-classification");
    // d! * 2^d signed lexicographic orders.
    const std::size_t expected[] = {0, 2, 8, 48};
    for (int d = 1; d <= 3; ++d) {
        run.check("Jord" + std::to_string(d), [&](std::string& details) {
            const DefStructure D = g::jord(d);
            const auto orders = enumerate_invariant_orders(D, opt.limits);
            std::set<std::string> kinds;
            for (const auto& o : orders) {
                auto lex = classify_signed_lex(o, D, opt.limits);
                if (!lex) return false;
                kinds.insert(lex->to_string());
            }
            details = std::to_string(orders.size()) + " orders, " + std::to_string(kinds.size()) + " distinct signed lex";
            return orders.size() == expected[d] && kinds.size() == orders.size();
        });
    }
    return run.take();
}

Report companion(const Options&) {
    Runner run("companion");
    run.check("generic-permutation-age", [&](std::string& details) {
        const auto target = sample_on(g::build_generic_perm_companion(), 8);
        std::size_t count = 0;
        for (int m = 1; m <= 4; ++m)
            for (const auto& perm : all_permutations(m)) {
                if (!find_hom(g::two_orders(perm), target.structure, HomMode::Embedding)) return false;
                ++count;
            }
        details = std::to_string(count) + " pairs of orders embed into " + std::to_string(target.size()) + " points";
        return true;
    });
    run.check("QST-mutual-embedding", [&](std::string& details) {
        for (int n = 2; n <= 5; ++n) {
            const auto qst = sample_on(g::build_QST(), n);
            const auto comp = sample_on(g::build_QST_companion(), n);
            Hom::validated(qst.structure, comp.structure, g::qst_to_companion(qst, comp), HomMode::Embedding);
            const auto back = sample(g::build_QST(), g::qst_atoms_for_companion(comp.atoms));
            Hom::validated(comp.structure, back.structure, g::companion_to_qst(comp, back), HomMode::Embedding);
        }
        details = "explicit embeddings validated for 2..5 atoms";
        return true;
    });
    for (int n : {5, 7}) {
        run.check("cut-roundtrip-" + std::to_string(n), [&](std::string& details) {
            std::size_t samples = 0;
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> labels;
                for (int i = 0; i < n; ++i) labels.push_back(mask >> i & 1);
                const auto s = sample_on(g::build_S2(), n, labels);
                for (int c = 0; c < n; ++c)
                    if (!g::s2_cut_roundtrip(s.structure, c)) return false;
                ++samples;
            }
            details = std::to_string(samples) + " label patterns, every cut point";
            return true;
        });
    }
    return run.take();
}

Report core_engine(const Options& opt) {
    Runner run("core-engine");
    std::mt19937_64 rng(opt.seed);
    std::vector<FinStructure> cases;
    for (int i = 0; i < 200; ++i) cases.push_back(random_structure(rng));
    run.check("core-properties", [&](std::string& details) {
        for (const auto& s : cases) {
            const CoreResult c = compute_core(s);
            Hom::validated(s, c.core, c.retraction.map());
            for (std::size_t k = 0; k < c.elements.size(); ++k)
                if (c.retraction(c.elements[k]) != static_cast<int>(k)) return false;
            if (!is_core(c.core)) return false;
            const CoreResult again = compute_core(c.core);
            if (!again.was_core || !(again.core == c.core)) return false;
            if (!find_hom(c.core, s, HomMode::Embedding)) return false;
        }
        details = std::to_string(cases.size()) + " structures";
        return true;
    });
    run.check("canonical-form-vs-iso", [&](std::string& details) {
        std::size_t same = 0, differ = 0;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const FinStructure& s = cases[i];
            std::vector<int> perm(static_cast<std::size_t>(s.size()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<Tuple>> rels(s.signature().size());
            for (std::size_t r = 0; r < rels.size(); ++r)
                for (auto t : s.tuples(r)) {
                    for (int& x : t) x = perm[x];
                    rels[r].push_back(std::move(t));
                }
            const FinStructure relabeled(s.signature(), s.size(), std::move(rels));
            if (canonical_form(s) != canonical_form(relabeled)) return false;
            // Move one tuple of the relabeled copy: tuple counts stay equal, so
            // the result is sometimes isomorphic and sometimes not.
            const std::size_t r = rng() % s.signature().size();
            std::vector<Tuple> changed = relabeled.tuples(r);
            Tuple t;
            for (int k = 0; k < s.signature()[r].arity; ++k) t.push_back(pick(rng, 0, s.size() - 1));
            if (!changed.empty() && std::find(changed.begin(), changed.end(), t) == changed.end()) {
                changed.erase(changed.begin() + static_cast<std::ptrdiff_t>(rng() % changed.size()));
                changed.push_back(t);
            }
            for (const FinStructure& other : {cases[(i + 1) % cases.size()], relabeled.with_relation(r, changed)}) {
                const bool cf_equal = canonical_form(s) == canonical_form(other);
                const bool iso = s.signature() == other.signature() && s.size() == other.size() &&
                                 find_hom(s, other, HomMode::Iso).has_value();
                if (cf_equal != iso) return false;
                (iso ? same : differ) += 1;
            }
        }
        details = std::to_string(cases.size()) + " relabelings agree; comparison pairs: " + std::to_string(same) +
                  " isomorphic, " + std::to_string(differ) + " not";
        return true;
    });
    return run.take();
}

Report sampling_functoriality(const Options& opt) {
    Runner run("sampling-functoriality");
    run.check("induced-restriction", [&](std::string& details) {
        std::mt19937_64 rng(opt.seed);
        std::size_t points = 0;
        for (int i = 0; i < 50; ++i) {
            const SamplingCase c = random_sampling_case(rng);
            const SampledStructure big = sample(c.structure, c.big);
            const SampledStructure small = sample(c.structure, c.small);
            std::vector<int> ids;
            for (std::size_t p = 0; p < small.size(); ++p) {
                std::vector<int> support;
                for (int a : small.point_support[p])
                    support.push_back(static_cast<int>(*big.atoms.index_of(small.atoms[a].value())));
                ids.push_back(*big.find(small.point_sort[p], support));
            }
            if (!std::is_sorted(ids.begin(), ids.end())) return false;
            if (!(induced_substructure(big.structure, ids).structure == small.structure)) return false;
            points += big.size();
        }
        details = "50 cases, " + std::to_string(points) + " points in the larger samples";
        return true;
    });
    return run.take();
}

using SuiteFn = Report (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> list = {
        {"hom-equivalence", hom_equivalence},
        {"covering", covering},
        {"johnson-core", johnson_core},
        {"involution", involution},
        {"spider", spider},
        {"growth", growth},
        {"order-classification", order_classification},
        {"companion", companion},
        {"core-engine", core_engine},
        {"sampling-functoriality", sampling_functoriality},
    };
    return list;
}

Formula random_formula(std::mt19937_64& rng, int positions, const AtomBase& base, int depth) {
    if (positions == 0) return pick(rng, 0, 1) ? Formula::top() : Formula::bottom();
    if (depth == 0 || pick(rng, 0, 2) == 0) {
        const int i = pick(rng, 0, positions - 1), j = pick(rng, 0, positions - 1);
        int choice = pick(rng, 0, 2);
        if (choice == 0 && !base.ordered) choice = 1;
        if (choice == 2 && !base.labeled()) choice = 1;
        if (choice == 0) return Formula::less(i, j);
        if (choice == 1) return Formula::eq(i, j);
        return Formula::label(i, pick(rng, 0, base.alphabet - 1));
    }
    switch (pick(rng, 0, 2)) {
    case 0: return !random_formula(rng, positions, base, depth - 1);
    case 1: return random_formula(rng, positions, base, depth - 1) && random_formula(rng, positions, base, depth - 1);
    default: return random_formula(rng, positions, base, depth - 1) || random_formula(rng, positions, base, depth - 1);
    }
}

} // namespace

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skip";
    }
}

bool Report::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

nlohmann::json Report::to_json(bool with_timings) const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e = {{"id", c.id}, {"status", verify::to_string(c.status)}, {"details", c.details}};
        if (with_timings) e["wall_seconds"] = c.seconds;
        list.push_back(std::move(e));
    }
    return {{"report_version", 1}, {"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"checks", std::move(list)}};
}

std::string Report::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) out << to_string(c.status) << "  " << c.id << "  " << c.details << "\n";
    out << suite << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
}

Report run_suite(const std::string& name, const Options& options) {
    if (name == "all") {
        Report all{"all", {}};
        for (const auto& [suite, fn] : suites())
            for (auto& c : fn(options).checks) {
                c.id = suite + "/" + c.id;
                all.checks.push_back(std::move(c));
            }
        return all;
    }
    for (const auto& [suite, fn] : suites())
        if (suite == name) return fn(options);
    throw Error(ErrorCode::ParseError, "unknown suite \"" + name + "\"");
}

std::uint64_t local_order_growth_formula(int n) {
    if (n < 1) return 0;
    auto phi = [](int m) {
        int result = m;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                while (m % p == 0) m /= p;
                result -= result / p;
            }
        if (m > 1) result -= result / m;
        return result;
    };
    std::uint64_t sum = 0;
    for (int d = 1; d <= n; d += 2)
        if (n % d == 0) sum += static_cast<std::uint64_t>(phi(d)) << (n / d);
    return sum / (2 * static_cast<std::uint64_t>(n));
}

FinStructure random_structure(std::mt19937_64& rng, int max_size) {
    const int size = pick(rng, 1, max_size);
    const int relations = pick(rng, 1, 3);
    std::vector<RelationSymbol> symbols;
    for (int r = 0; r < relations; ++r) symbols.push_back({"r" + std::to_string(r), pick(rng, 1, 3)});
    std::vector<std::vector<Tuple>> rels(symbols.size());
    for (std::size_t r = 0; r < symbols.size(); ++r) {
        const int arity = symbols[r].arity;
        int total = 1;
        for (int k = 0; k < arity; ++k) total *= size;
        const int density = pick(rng, 5, 40);
        for (int code = 0; code < total; ++code) {
            if (pick(rng, 0, 99) >= density) continue;
            Tuple t(static_cast<std::size_t>(arity));
            int c = code;
            for (int k = arity - 1; k >= 0; --k) {
                t[k] = c % size;
                c /= size;
            }
            rels[r].push_back(std::move(t));
        }
    }
    return FinStructure(Signature(std::move(symbols)), size, std::move(rels));
}

SamplingCase random_sampling_case(std::mt19937_64& rng) {
    const int which = pick(rng, 0, 2);
    const AtomBase base = which == 0 ? AtomBase::pure_set() : which == 1 ? AtomBase::dlo() : AtomBase::labeled_dlo(2);
    std::vector<Sort> sorts;
    const int nsorts = pick(rng, 1, 2);
    for (int s = 0; s < nsorts; ++s) sorts.push_back({"s" + std::to_string(s), pick(rng, 0, 2), {}, {}});
    const bool same_dim = std::all_of(sorts.begin(), sorts.end(), [&](const Sort& s) { return s.dim == sorts[0].dim; });
    std::vector<RelationClause> clauses;
    const int nclauses = pick(rng, 1, 4);
    for (int c = 0; c < nclauses; ++c) {
        const int arity = pick(rng, 1, 3);
        std::vector<std::optional<int>> guard;
        int positions = 0;
        for (int k = 0; k < arity; ++k) {
            if (same_dim && pick(rng, 0, 3) == 0) {
                guard.push_back(std::nullopt);
                positions += sorts[0].dim;
            } else {
                const int s = pick(rng, 0, nsorts - 1);
                guard.push_back(s);
                positions += sorts[s].dim;
            }
        }
        // Clauses sharing a name must share an arity; names encode it.
        const std::string name = "r" + std::to_string(pick(rng, 0, 1)) + "_" + std::to_string(arity);
        clauses.push_back({name, arity, std::move(guard), random_formula(rng, positions, base, 2)});
    }
    std::set<Rational> values;
    const int big = pick(rng, 3, 6);
    while (static_cast<int>(values.size()) < big) {
        Rational v(pick(rng, -20, 20), pick(rng, 1, 4));
        v.canonicalize();
        values.insert(v);
    }
    std::vector<Atom> atoms;
    for (const auto& v : values) atoms.emplace_back(v, pick(rng, 0, base.alphabet - 1));
    AtomSample big_sample(base, std::move(atoms));
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < big_sample.size(); ++i)
        if (pick(rng, 0, 2) != 0) keep.push_back(i);
    AtomSample small = big_sample.subset(keep);
    return {DefStructure(base, std::move(sorts), std::move(clauses)), std::move(big_sample), std::move(small)};
}

} // namespace orbitfin::verify
