#include "coalition/verify.hpp"

#include "coalition/enumerate.hpp"
#include "coalition/errors.hpp"
#include "coalition/generators.hpp"
#include "coalition/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

namespace coalition {

const std::vector<TheoremInfo>& theorem_registry()
{
    static const std::vector<TheoremInfo> registry{
        {TheoremId::cc_zero_iff_family_f, "T1", "cc_zero_iff_family_f", "CC(G) = 0 iff G is in family F",
         "all graphs", true},
        {TheoremId::cc_ge_two_dc, "T2", "cc_ge_two_dc", "CC(G) >= 2 d_c(G)",
         "connected, n > 1, no full vertex", true},
        {TheoremId::trees_cc_two, "T3", "trees_cc_two", "CC(T) = 2 for trees", "trees without a full vertex", true},
        {TheoremId::pendant_lt_n, "T4", "pendant_lt_n", "CC(G) < n when min degree is 1",
         "connected, min degree 1, no full vertex", true},
        {TheoremId::algo1_iff_oracle, "T5", "algo1_iff_oracle", "matrix test for CC(G) = n agrees with the oracle",
         "connected, n >= 2, no full vertex", true},
        {TheoremId::algo2_vs_oracle, "T6", "algo2_vs_oracle",
         "pair test for CC(G) = n-1 (paper and strict variants) against the oracle",
         "connected, n >= 3, no full vertex", false},
        {TheoremId::corona_cc_two, "T7", "corona_cc_two", "CC(H o K_1) = 2", "coronas H o K_1 with H connected", true},
        {TheoremId::full_vertex_lower, "T8", "full_vertex_lower", "CC(G) >= k + 2 with k full vertices",
         "connected, not in F, not complete, k >= 1 full vertices", true},
        {TheoremId::disconnected_zero, "T9", "disconnected_zero", "CC(G) = 0 for disconnected graphs",
         "disconnected, n >= 2", true},
        {TheoremId::lower_upper_bounds, "T10", "lower_upper_bounds", "1 <= CC(G) <= n", "connected, not in F", true},
    };
    return registry;
}

const TheoremInfo& theorem_info(TheoremId id)
{
    for (const auto& info : theorem_registry())
        if (info.id == id)
            return info;
    throw PreconditionError("unknown theorem id");
}

TheoremId parse_theorem_id(std::string_view text)
{
    std::string key(text);
    for (auto& c : key)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& info : theorem_registry()) {
        std::string lower_key = info.key;
        for (auto& c : lower_key)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (key == lower_key || key == lower_key.substr(1) || key == info.name)
            return info.id;
    }
    throw PreconditionError("unknown theorem id '" + std::string(text) + "' (expected T1..T10)");
}

// ---------------------------------------------------------------------------
// Corpora

Corpus::Corpus(CorpusDescriptor descriptor, std::uint64_t size, Generator at)
    : descriptor_(std::move(descriptor)), size_(size), at_(std::move(at))
{
}

namespace {

/// Maps a flat index onto (order, local index) for a run of orders.
struct OrderRanges {
    std::vector<std::size_t> orders;
    std::vector<std::uint64_t> starts;
    std::uint64_t total = 0;

    void add(std::size_t n, std::uint64_t count)
    {
        orders.push_back(n);
        starts.push_back(total);
        total += count;
    }

    std::pair<std::size_t, std::uint64_t> locate(std::uint64_t index) const
    {
        auto it = std::upper_bound(starts.begin(), starts.end(), index);
        const auto slot = static_cast<std::size_t>(it - starts.begin()) - 1;
        return {orders[slot], index - starts[slot]};
    }
};

} // namespace

Corpus Corpus::labeled(std::size_t n_min, std::size_t n_max, bool connected_only, bool allow_override)
{
    if (n_min < 1 || n_min > n_max)
        throw PreconditionError("labeled corpus: requires 1 <= n_min <= n_max");
    OrderRanges ranges;
    for (std::size_t n = n_min; n <= n_max; ++n)
        ranges.add(n, LabeledGraphEnumerator(n, connected_only, allow_override).total());
    const std::uint64_t total = ranges.total;
    return Corpus({"labeled", n_min, n_max, connected_only}, total,
                  [ranges = std::move(ranges), connected_only](std::uint64_t index) -> std::optional<Graph> {
                      const auto [n, local] = ranges.locate(index);
                      Graph g = labeled_graph_at(n, local);
                      if (connected_only && !is_connected(g))
                          return std::nullopt;
                      return g;
                  });
}

Corpus Corpus::labeled_trees(std::size_t n_min, std::size_t n_max)
{
    if (n_min < 1 || n_min > n_max)
        throw PreconditionError("tree corpus: requires 1 <= n_min <= n_max");
    OrderRanges ranges;
    for (std::size_t n = n_min; n <= n_max; ++n)
        ranges.add(n, labeled_tree_count(n));
    const std::uint64_t total = ranges.total;
    return Corpus({"pruefer-trees", n_min, n_max, true}, total,
                  [ranges = std::move(ranges)](std::uint64_t index) -> std::optional<Graph> {
                      const auto [n, local] = ranges.locate(index);
                      return labeled_tree_at(n, local);
                  });
}

Corpus Corpus::coronas(std::size_t h_max)
{
    if (h_max < 1 || h_max > kEnumerationGuard)
        throw PreconditionError("corona corpus: requires 1 <= h_max <= 7");
    OrderRanges ranges;
    for (std::size_t n = 1; n <= h_max; ++n)
        ranges.add(n, std::uint64_t{1} << pair_count(n));
    const std::uint64_t total = ranges.total;
    const Graph k1 = gen::complete(1);
    return Corpus({"corona-k1", 2, 2 * h_max, true}, total,
                  [ranges = std::move(ranges), k1](std::uint64_t index) -> std::optional<Graph> {
                      const auto [n, local] = ranges.locate(index);
                      Graph h = labeled_graph_at(n, local);
                      if (!is_connected(h))
                          return std::nullopt;
                      return corona(h, k1);
                  });
}

Corpus Corpus::from_graphs(std::string source, std::vector<Graph> graphs)
{
    CorpusDescriptor d{std::move(source), 0, 0, false};
    if (!graphs.empty()) {
        d.n_min = graphs.front().order();
        for (const auto& g : graphs) {
            d.n_min = std::min(d.n_min, g.order());
            d.n_max = std::max(d.n_max, g.order());
        }
    }
    const auto size = static_cast<std::uint64_t>(graphs.size());
    return Corpus(std::move(d), size,
                  [graphs = std::move(graphs)](std::uint64_t index) -> std::optional<Graph> { return graphs.at(index); });
}

// ---------------------------------------------------------------------------
// Per-graph facts and theorem evaluation

namespace {

class Facts {
public:
    Facts(const Graph& g, std::size_t guard) : g_(g), guard_(guard) {}

    const Graph& graph() const { return g_; }
    std::size_t n() const { return g_.order(); }

    bool connected()
    {
        if (!connected_)
            connected_ = is_connected(g_);
        return *connected_;
    }
    std::size_t full_count()
    {
        if (!full_count_)
            full_count_ = full_vertices(g_).size();
        return *full_count_;
    }
    const CcResult& cc()
    {
        if (!cc_)
            cc_ = cc_number(g_, guard_);
        return *cc_;
    }
    const FamilyVerdict& family()
    {
        if (!family_)
            family_ = in_family_f(g_);
        return *family_;
    }
    std::size_t d_c()
    {
        if (!d_c_)
            d_c_ = connected_domatic_number(g_, guard_).k;
        return *d_c_;
    }
    bool check_n()
    {
        if (!check_n_)
            check_n_ = check_cc_equals_n(g_).answer;
        return *check_n_;
    }
    const CheckN1Decision& n1(Variant v)
    {
        auto& slot = v == Variant::paper ? paper_ : strict_;
        if (!slot)
            slot = check_cc_equals_n_minus_1(g_, v);
        return *slot;
    }

    /// Connected, no full vertex, at least `min_order` vertices.
    bool checkable(std::size_t min_order) { return n() >= min_order && connected() && full_count() == 0; }

private:
    const Graph& g_;
    std::size_t guard_;
    std::optional<bool> connected_;
    std::optional<std::size_t> full_count_;
    std::optional<CcResult> cc_;
    std::optional<FamilyVerdict> family_;
    std::optional<std::size_t> d_c_;
    std::optional<bool> check_n_;
    std::optional<CheckN1Decision> paper_;
    std::optional<CheckN1Decision> strict_;
};

struct Outcome {
    bool pass = true;
    std::string expected;
    std::string actual;
    std::string detail;
    std::vector<std::string> stats;
};

std::string cc_text(std::size_t cc) { return "cc=" + std::to_string(cc); }
std::string b(bool v) { return v ? "true" : "false"; }

std::string pair_text(const CheckN1Decision& d)
{
    if (!d.answer)
        return d.refutation;
    return "pair (" + std::to_string(d.pair->first) + "," + std::to_string(d.pair->second) + "), anchor " +
           std::to_string(*d.anchor);
}

std::optional<Outcome> evaluate(TheoremId id, Facts& f)
{
    const std::size_t n = f.n();
    Outcome o;
    switch (id) {
    case TheoremId::cc_zero_iff_family_f: {
        const bool member = f.family().member;
        const std::size_t cc = f.cc().cc;
        o.pass = member == (cc == 0);
        o.expected = member ? "cc=0 (member of F)" : "cc>0 (not in F)";
        o.actual = cc_text(cc);
        o.detail = std::string("peel terminal ") + to_string(f.family().trace.terminal);
        return o;
    }
    case TheoremId::cc_ge_two_dc: {
        if (!f.checkable(2))
            return std::nullopt;
        const std::size_t dc = f.d_c();
        o.pass = f.cc().cc >= 2 * dc;
        o.expected = "cc>=" + std::to_string(2 * dc) + " (d_c=" + std::to_string(dc) + ")";
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::trees_cc_two: {
        if (!is_tree(f.graph()) || f.full_count() != 0)
            return std::nullopt;
        o.pass = f.cc().cc == 2;
        o.expected = "cc=2";
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::pendant_lt_n: {
        if (!f.checkable(1) || f.graph().min_degree() != 1)
            return std::nullopt;
        o.pass = f.cc().cc < n;
        o.expected = "cc<" + std::to_string(n);
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::algo1_iff_oracle: {
        if (!f.checkable(2))
            return std::nullopt;
        const bool predicted = f.check_n();
        o.pass = predicted == (f.cc().cc == n);
        o.expected = predicted ? "cc=" + std::to_string(n) : "cc<" + std::to_string(n);
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::algo2_vs_oracle: {
        if (!f.checkable(3))
            return std::nullopt;
        const bool oracle = f.cc().cc == n - 1;
        const auto& paper = f.n1(Variant::paper);
        const auto& strict = f.n1(Variant::strict);
        o.stats.push_back("oracle_positive:" + std::to_string(oracle ? 1 : 0));
        o.stats.push_back("paper_positive:" + std::to_string(paper.answer ? 1 : 0));
        o.stats.push_back("strict_positive:" + std::to_string(strict.answer ? 1 : 0));
        o.stats.push_back("paper_agree:" + std::to_string(paper.answer == oracle ? 1 : 0));
        o.stats.push_back("paper_false_positive:" + std::to_string(paper.answer && !oracle ? 1 : 0));
        o.stats.push_back("paper_false_negative:" + std::to_string(!paper.answer && oracle ? 1 : 0));
        o.stats.push_back("strict_violations:" + std::to_string(strict.answer && !oracle ? 1 : 0));
        o.stats.push_back("strict_misses:" + std::to_string(!strict.answer && oracle ? 1 : 0));
        o.pass = paper.answer == oracle && strict.answer == oracle;
        o.expected = "paper=" + b(paper.answer) + " strict=" + b(strict.answer);
        o.actual = cc_text(f.cc().cc) + " (n-1=" + std::to_string(n - 1) + ")";
        o.detail = "paper: " + pair_text(paper) + "; strict: " + pair_text(strict);
        return o;
    }
    case TheoremId::corona_cc_two: {
        if (!is_corona_with_k1(f.graph()))
            return std::nullopt;
        o.pass = f.cc().cc == 2;
        o.expected = "cc=2";
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::full_vertex_lower: {
        if (!f.connected() || f.family().member)
            return std::nullopt;
        const std::size_t k = f.full_count();
        if (k == 0 || k == n)
            return std::nullopt;
        o.pass = f.cc().cc >= k + 2;
        o.expected = "cc>=" + std::to_string(k + 2) + " (k=" + std::to_string(k) + ")";
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::disconnected_zero: {
        if (n < 2 || f.connected())
            return std::nullopt;
        o.pass = f.cc().cc == 0;
        o.expected = "cc=0";
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    case TheoremId::lower_upper_bounds: {
        if (!f.connected() || f.family().member)
            return std::nullopt;
        o.pass = f.cc().cc >= 1 && f.cc().cc <= n;
        o.expected = "1<=cc<=" + std::to_string(n);
        o.actual = cc_text(f.cc().cc);
        return o;
    }
    }
    return std::nullopt;
}

struct Accumulator {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::vector<Counterexample> counterexamples;
    double millis = 0.0;
    std::map<std::string, std::uint64_t> stats;
};

void run_range(const Corpus& corpus, const std::vector<TheoremId>& theorems, std::size_t guard, std::uint64_t begin,
               std::uint64_t end, std::vector<Accumulator>& acc)
{
    using clock = std::chrono::steady_clock;
    for (std::uint64_t index = begin; index < end; ++index) {
        const auto g = corpus.at(index);
        if (!g)
            continue;
        if (g->order() > guard)
            throw GuardError("corpus graph " + std::to_string(index) + " has order " + std::to_string(g->order()) +
                             " above the oracle guard " + std::to_string(guard));
        Facts facts(*g, guard);
        for (std::size_t t = 0; t < theorems.size(); ++t) {
            const auto start = clock::now();
            const auto outcome = evaluate(theorems[t], facts);
            acc[t].millis += std::chrono::duration<double, std::milli>(clock::now() - start).count();
            if (!outcome)
                continue;
            ++acc[t].checked;
            for (const auto& stat : outcome->stats) {
                const auto colon = stat.find(':');
                acc[t].stats[stat.substr(0, colon)] += std::stoull(stat.substr(colon + 1));
            }
            if (outcome->pass) {
                ++acc[t].passed;
            } else {
                acc[t].counterexamples.push_back(
                    {index, g->order() <= kGraph6MaxOrder ? emit_graph6(*g) : std::string(), outcome->expected,
                     outcome->actual, outcome->detail});
            }
        }
    }
}

} // namespace

VerifyReport run_theorem_suite(const Corpus& corpus, const std::vector<TheoremId>& theorems,
                               const SuiteOptions& options)
{
    std::size_t workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, corpus.size())));

    std::vector<std::vector<Accumulator>> partial(workers, std::vector<Accumulator>(theorems.size()));
    std::vector<std::exception_ptr> errors(workers);
    const std::uint64_t chunk = (corpus.size() + workers - 1) / std::max<std::size_t>(workers, 1);

    auto work = [&](std::size_t w) {
        try {
            const std::uint64_t begin = std::min<std::uint64_t>(corpus.size(), w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(corpus.size(), begin + chunk);
            run_range(corpus, theorems, options.guard, begin, end, partial[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    VerifyReport report;
    report.corpus = corpus.descriptor();
    for (std::size_t t = 0; t < theorems.size(); ++t) {
        TheoremReport tr;
        tr.info = theorem_info(theorems[t]);
        tr.corpus = corpus.descriptor();
        for (auto& worker : partial) {
            auto& acc = worker[t];
            tr.checked += acc.checked;
            tr.passed += acc.passed;
            tr.millis += acc.millis;
            for (const auto& [key, value] : acc.stats)
                tr.stats[key] += value;
            std::move(acc.counterexamples.begin(), acc.counterexamples.end(), std::back_inserter(tr.counterexamples));
        }
        if (theorems[t] == TheoremId::algo2_vs_oracle) {
            tr.notes.push_back("paper variant checks the covering and anchor conditions only");
            tr.notes.push_back("strict variant also requires {u,v} to be a non-CDS and CC(G) != n");
            tr.notes.push_back("conditions are evaluated for every x before a pair is accepted; an early "
                               "flag-based return is not reproduced");
        }
        report.theorems.push_back(std::move(tr));
    }
    return report;
}

VerifyReport merge_reports(std::vector<VerifyReport> reports)
{
    VerifyReport out;
    if (reports.empty())
        return out;
    out.corpus = reports.front().corpus;
    for (auto& r : reports)
        std::move(r.theorems.begin(), r.theorems.end(), std::back_inserter(out.theorems));
    return out;
}

bool VerifyReport::ok() const
{
    for (const auto& t : theorems)
        if (t.info.asserted && !t.counterexamples.empty())
            return false;
    return true;
}

bool replay_counterexample(TheoremId id, const Counterexample& certificate, std::size_t guard)
{
    const Graph g = parse_graph6(certificate.graph6);
    Facts facts(g, guard);
    const auto outcome = evaluate(id, facts);
    return outcome && !outcome->pass && outcome->expected == certificate.expected &&
           outcome->actual == certificate.actual;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::ordered_json corpus_json(const CorpusDescriptor& d)
{
    nlohmann::ordered_json j;
    j["source"] = d.source;
    j["n_min"] = d.n_min;
    j["n_max"] = d.n_max;
    j["connected_only"] = d.connected_only;
    return j;
}

} // namespace

std::string report_to_json(const VerifyReport& report, bool include_timing)
{
    nlohmann::ordered_json root;
    root["corpus"] = corpus_json(report.corpus);
    root["theorems"] = nlohmann::ordered_json::array();
    for (const auto& t : report.theorems) {
        nlohmann::ordered_json j;
        j["id"] = t.info.key;
        j["name"] = t.info.name;
        j["anchor"] = t.info.anchor;
        j["scope"] = t.info.scope;
        j["asserted"] = t.info.asserted;
        j["corpus"] = corpus_json(t.corpus);
        j["checked"] = t.checked;
        j["passed"] = t.passed;
        j["counterexamples"] = nlohmann::ordered_json::array();
        for (const auto& c : t.counterexamples) {
            nlohmann::ordered_json cj;
            cj["graph6"] = c.graph6;
            cj["index"] = c.corpus_index;
            cj["detail"] = {{"expected", c.expected}, {"actual", c.actual}, {"witness", c.detail}};
            j["counterexamples"].push_back(std::move(cj));
        }
        if (include_timing)
            j["millis"] = t.millis;
        if (!t.stats.empty())
            j["stats"] = t.stats;
        if (!t.notes.empty())
            j["notes"] = t.notes;
        root["theorems"].push_back(std::move(j));
    }
    root["ok"] = report.ok();
    return root.dump(2) + "\n";
}

std::string report_to_text(const VerifyReport& report)
{
    std::ostringstream os;
    os << std::left << std::setw(5) << "id" << std::setw(22) << "name" << std::setw(22) << "corpus" << std::right
       << std::setw(10) << "checked" << std::setw(10) << "passed" << std::setw(6) << "cex" << std::setw(12)
       << "millis"
       << "  status\n";
    for (const auto& t : report.theorems) {
        std::ostringstream corpus;
        corpus << t.corpus.source << " " << t.corpus.n_min << ".." << t.corpus.n_max;
        const char* status = !t.info.asserted ? "REPORT" : (t.counterexamples.empty() ? "PASS" : "FAIL");
        os << std::left << std::setw(5) << t.info.key << std::setw(22) << t.info.name << std::setw(22) << corpus.str()
           << std::right << std::setw(10) << t.checked << std::setw(10) << t.passed << std::setw(6)
           << t.counterexamples.size() << std::setw(12) << std::fixed << std::setprecision(1) << t.millis << "  "
           << status << '\n';
        for (const auto& [key, value] : t.stats)
            os << "       " << key << " = " << value << '\n';
    }
    os << (report.ok() ? "all asserted theorems hold\n" : "COUNTEREXAMPLES FOUND\n");
    return os.str();
}

// ---------------------------------------------------------------------------

bool CrossRecord::consistent() const
{
    for (const auto& [name, ok] : consistency)
        if (!ok)
            return false;
    return true;
}

CrossRecord cross_validate(const Graph& g, std::size_t guard)
{
    if (g.order() > guard)
        throw GuardError("cross_validate: n = " + std::to_string(g.order()) + " exceeds the guard " +
                         std::to_string(guard));
    CrossRecord r;
    const std::size_t n = g.order();
    r.order = n;
    r.connected = is_connected(g);
    r.cc = cc_number(g, guard);
    r.family = in_family_f(g);
    r.consistency["cc_zero_iff_family_f"] = (r.cc.cc == 0) == r.family.member;
    if (r.cc.witness)
        r.consistency["witness_valid"] = is_cc_partition(g, *r.cc.witness).valid;
    if (r.connected) {
        r.d_c = connected_domatic_number(g, guard).k;
        r.gamma_c = gamma_c(g).size;
        r.consistency["dc_times_gamma_le_n"] = *r.d_c * *r.gamma_c <= n;
    } else if (n >= 2) {
        r.consistency["disconnected_zero"] = r.cc.cc == 0;
    }
    const bool checkable = r.connected && full_vertices(g).empty();
    if (checkable && n >= 2) {
        r.check_n = check_cc_equals_n(g).answer;
        r.consistency["check_n_matches_oracle"] = *r.check_n == (r.cc.cc == n);
        r.consistency["cc_ge_two_dc"] = r.cc.cc >= 2 * *r.d_c;
    }
    if (checkable && n >= 3) {
        r.check_n1_paper = check_cc_equals_n_minus_1(g, Variant::paper).answer;
        r.check_n1_strict = check_cc_equals_n_minus_1(g, Variant::strict).answer;
        r.consistency["strict_n1_matches_oracle"] = *r.check_n1_strict == (r.cc.cc == n - 1);
    }
    return r;
}

} // namespace coalition
