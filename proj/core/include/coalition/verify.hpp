#pragma once

#include "coalition/coalition.hpp"
#include "coalition/domination.hpp"
#include "coalition/family_f.hpp"
#include "coalition/graph.hpp"
#include "coalition/matrix_checks.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coalition {

enum class TheoremId {
    cc_zero_iff_family_f = 1, ///< T1
    cc_ge_two_dc,             ///< T2
    trees_cc_two,             ///< T3
    pendant_lt_n,             ///< T4
    algo1_iff_oracle,         ///< T5
    algo2_vs_oracle,          ///< T6, report-only
    corona_cc_two,            ///< T7
    full_vertex_lower,        ///< T8
    disconnected_zero,        ///< T9
    lower_upper_bounds,       ///< T10
};

struct TheoremInfo {
    TheoremId id;
    std::string key;    ///< "T1".."T10"
    std::string name;   ///< snake_case identifier
    std::string anchor; ///< the claim being checked, in words
    std::string scope;  ///< which graphs the claim applies to
    bool asserted;      ///< false only for T6
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_info(TheoremId id);

/// Accepts "T3", "t3", "3" or the snake_case name. Throws PreconditionError.
TheoremId parse_theorem_id(std::string_view text);

struct CorpusDescriptor {
    std::string source; ///< "labeled", "pruefer-trees", "corona-k1", or a file name
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    bool connected_only = false;
};

/// Index-addressable graph corpus. at(i) yields nullopt for indices the
/// corpus filters out (e.g. disconnected graphs in a connected-only corpus),
/// which lets workers split the index range without coordination.
class Corpus {
public:
    using Generator = std::function<std::optional<Graph>(std::uint64_t)>;

    Corpus(CorpusDescriptor descriptor, std::uint64_t size, Generator at);

    /// All labeled graphs with n_min <= n <= n_max.
    static Corpus labeled(std::size_t n_min, std::size_t n_max, bool connected_only, bool allow_override = false);
    /// All labeled trees with n_min <= n <= n_max, from Pruefer sequences.
    static Corpus labeled_trees(std::size_t n_min, std::size_t n_max);
    /// corona(H, K_1) for every connected labeled H with 1 <= |H| <= h_max.
    static Corpus coronas(std::size_t h_max);
    static Corpus from_graphs(std::string source, std::vector<Graph> graphs);

    const CorpusDescriptor& descriptor() const { return descriptor_; }
    std::uint64_t size() const { return size_; }
    std::optional<Graph> at(std::uint64_t index) const { return at_(index); }

private:
    CorpusDescriptor descriptor_;
    std::uint64_t size_;
    Generator at_;
};

struct Counterexample {
    std::uint64_t corpus_index = 0;
    std::string graph6;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct TheoremReport {
    TheoremInfo info;
    CorpusDescriptor corpus;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::vector<Counterexample> counterexamples;
    double millis = 0.0;
    /// Extra counters (T6 agreement statistics).
    std::map<std::string, std::uint64_t> stats;
    std::vector<std::string> notes;
};

struct VerifyReport {
    CorpusDescriptor corpus;
    std::vector<TheoremReport> theorems;

    /// True iff every asserted theorem has no counterexamples.
    bool ok() const;
};

struct SuiteOptions {
    std::size_t workers = 0; ///< 0 = hardware concurrency
    std::size_t guard = kPartitionSearchGuard;
};

/// Checks every listed theorem against every graph of the corpus that falls
/// in the theorem's scope. Results are merged in corpus order, so the report
/// is identical for any worker count apart from timing.
VerifyReport run_theorem_suite(const Corpus& corpus, const std::vector<TheoremId>& theorems,
                               const SuiteOptions& options = {});

/// Concatenates per-corpus reports; the first corpus becomes the headline.
VerifyReport merge_reports(std::vector<VerifyReport> reports);

/// Re-runs one theorem on the certificate's graph; true iff the same
/// expected/actual discrepancy is reproduced.
bool replay_counterexample(TheoremId id, const Counterexample& certificate,
                           std::size_t guard = kPartitionSearchGuard);

std::string report_to_json(const VerifyReport& report, bool include_timing = true);
std::string report_to_text(const VerifyReport& report);

/// Everything the library computes about one graph.
struct CrossRecord {
    std::size_t order = 0;
    bool connected = false;
    CcResult cc;
    std::optional<std::size_t> d_c;
    std::optional<std::size_t> gamma_c;
    FamilyVerdict family;
    std::optional<bool> check_n;
    std::optional<bool> check_n1_paper;
    std::optional<bool> check_n1_strict;
    /// Named agreement checks between the values above; only applicable
    /// ones are present.
    std::map<std::string, bool> consistency;

    bool consistent() const;
};

CrossRecord cross_validate(const Graph& g, std::size_t guard = kPartitionSearchGuard);

} // namespace coalition
