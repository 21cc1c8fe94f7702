#include "ramsey/engine.hpp"

#include "ramsey/bluepath_dp.hpp"
#include "ramsey/redcycle.hpp"
#include "ramsey/transcript.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace ramsey {

void SearchStats::merge(const SearchStats& o) {
    nodes += o.nodes;
    red_leaves += o.red_leaves;
    blue_leaves += o.blue_leaves;
    max_leaf_depth = std::max(max_leaf_depth, o.max_leaf_depth);
    deepest_endpoint = std::max(deepest_endpoint, o.deepest_endpoint);
}

ClosingCert find_closing_certificate(const UpColoring& c, const SearchConfig& cfg) {
    cfg.validate();
    int f = c.frontier();
    if (f < 0) return std::monostate{};
    std::vector<UpString> ups;
    ups.reserve(f + 1);
    for (int v = 0; v <= f; ++v) {
        if (c.up(v).length() != cfg.power) {
            throw std::invalid_argument("certificate search needs full-length up-strings");
        }
        ups.push_back(c.up(v));
    }

    auto cyc = find_red_cycle(ups, cfg.power, cfg.cycle_cap);
    if (!cyc.empty()) return RedCycleCert{std::move(cyc)};

    for (int j = std::min(f, cfg.max_depth); j >= 1; --j) {
        if (!cfg.end_pred.matches(ups[j])) continue;
        int cnt = max_blue_path(ups, cfg.power, 0, j, {});
        if (cnt < 2) continue;
        if (static_cast<long long>(cnt - 1) * cfg.target.den() <
            cfg.target.num() * static_cast<long long>(j)) {
            continue;
        }
        auto path = lexmin_blue_path(ups, cfg.power, j, cnt);
        return BluePathCert::from_vertices(std::move(path));
    }
    return std::monostate{};
}

namespace {

struct BudgetState {
    long long max_nodes = -1;
    bool timed = false;
    std::chrono::steady_clock::time_point deadline{};
    std::atomic<long long> used{0};
    std::atomic<bool> tripped{false};

    explicit BudgetState(const SearchBudget& b) : max_nodes(b.max_nodes) {
        if (b.max_seconds >= 0.0) {
            timed = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(b.max_seconds));
        }
    }

    bool charge(long long batch) {
        if (tripped.load(std::memory_order_relaxed)) return false;
        long long total = used.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (max_nodes >= 0 && total > max_nodes) {
            tripped.store(true, std::memory_order_relaxed);
            return false;
        }
        if (timed && std::chrono::steady_clock::now() >= deadline) {
            tripped.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

void atomic_min(std::atomic<long>& a, long v) {
    long cur = a.load(std::memory_order_relaxed);
    while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
}

// Preorder piece of the final transcript: either literal lines of one
// skeleton node, or a placeholder for a task subtree.
struct Segment {
    int first_depth = 0;
    int final_depth = 0;
    std::string bytes;
    long task = -1;
};

struct TaskSeed {
    std::vector<UpString> stack;  // labels of the task root (size = its depth)
    ProfileSet prof;              // profile after sweeping vertices 0..depth-1
};

struct ChunkResult {
    enum : unsigned char { Pending = 0, Done = 1, Failed = 2, Stopped = 3 };
    unsigned char state = Pending;
    std::string bytes;
    int final_depth = 0;
    SearchStats stats;
    std::vector<UpString> cex;
};

// One DFS engine instance: expands children in canonical label order, closes
// each with the incremental red check (new cycles must pass through the
// frontier) or the carried blue profile, recurses otherwise. In skeleton mode
// it stops at split depth and materializes segments and task seeds instead of
// recursing past it.
class SearchCore {
public:
    SearchCore(const SearchConfig& cfg, BudgetState* budget, std::atomic<long>* cex_min,
               long task_index)
        : cfg_(cfg),
          p_(cfg.power),
          cap_(cfg.cycle_cap),
          maxd_(cfg.max_depth),
          tnum_(cfg.target.num()),
          tden_(cfg.target.den()),
          dp_(cfg.power),
          budget_(budget),
          cex_min_(cex_min),
          task_index_(task_index) {
        root_labels_ = cfg.start_pred.allowed_upstrings(p_);
        for (unsigned b = 0; b < (1u << p_); ++b) all_labels_.emplace_back(b, p_);
        stack_.reserve(maxd_ + 1);
    }

    bool run_root() { return expand(0, dp_.initial()); }

    bool run_subtree(const std::vector<UpString>& seed, const ProfileSet& prof) {
        stack_ = seed;
        int d = static_cast<int>(stack_.size());
        writer.branch(d, stack_.back());
        return expand(d, prof);
    }

    bool run_skeleton(int split, std::vector<Segment>& segments, std::vector<TaskSeed>& seeds) {
        split_ = split;
        segments_ = &segments;
        seeds_ = &seeds;
        return expand(0, dp_.initial());
    }

    TranscriptWriter writer;
    SearchStats stats;
    std::vector<UpString> failure_cex;
    bool budget_hit = false;
    bool canceled = false;

private:
    bool charge_node() {
        ++stats.nodes;
        if (++pending_ < 64) return true;
        long long batch = pending_;
        pending_ = 0;
        if (budget_ && !budget_->charge(batch)) {
            budget_hit = true;
            return false;
        }
        if (cex_min_ && cex_min_->load(std::memory_order_relaxed) < task_index_) {
            canceled = true;
            return false;
        }
        return true;
    }

    void note_leaf(int frontier) {
        stats.max_leaf_depth = std::max(stats.max_leaf_depth, frontier);
    }

    // prof_prev: profile after sweeping vertices 0..d-1. Children sit at
    // frontier d; their shared profile (after sweeping d) does not depend on
    // their own label, so one advance serves all eight.
    bool expand(int d, const ProfileSet& prof_prev) {
        ProfileSet prof = dp_.advance(prof_prev, d, blue_mask_at(stack_, p_, d),
                                      d == 0 ? BluePathDP::VertexRole::Anchor
                                             : BluePathDP::VertexRole::Free);
        int cnt = d >= 1 ? dp_.best_complete(prof, d) : -1;
        bool qualifies = cnt >= 2 && static_cast<long long>(cnt - 1) * tden_ >=
                                         tnum_ * static_cast<long long>(d);
        std::vector<int> blue_cache;

        const std::vector<UpString>& labels = d == 0 ? root_labels_ : all_labels_;
        for (const UpString& lab : labels) {
            stack_.push_back(lab);
            if (!charge_node()) {
                stack_.pop_back();
                return false;
            }
            bool ok = true;
            auto cyc = find_red_cycle_through(stack_, p_, cap_, d);
            if (!cyc.empty()) {
                ++stats.red_leaves;
                note_leaf(d);
                if (segments_) {
                    TranscriptWriter w;
                    w.branch(d + 1, lab);
                    w.leaf_red(cyc);
                    segments_->push_back({d + 1, d + 1, w.take(), -1});
                } else {
                    writer.branch(d + 1, lab);
                    writer.leaf_red(cyc);
                }
            } else if (qualifies && cfg_.end_pred.matches(lab)) {
                if (blue_cache.empty()) {
                    blue_cache = dp_.lexmin_path(stack_, d, cnt);
                    if (blue_cache.empty()) {
                        throw std::logic_error("profile DP and path extraction disagree");
                    }
                }
                ++stats.blue_leaves;
                note_leaf(d);
                stats.deepest_endpoint = std::max(stats.deepest_endpoint, d);
                Rational density(cnt - 1, d);
                if (segments_) {
                    TranscriptWriter w;
                    w.branch(d + 1, lab);
                    w.leaf_blue(blue_cache, density);
                    segments_->push_back({d + 1, d + 1, w.take(), -1});
                } else {
                    writer.branch(d + 1, lab);
                    writer.leaf_blue(blue_cache, density);
                }
            } else if (d == maxd_) {
                failure_cex = stack_;
                ok = false;
            } else if (segments_ && d + 1 == split_) {
                segments_->push_back({d + 1, 0, std::string(), static_cast<long>(seeds_->size())});
                seeds_->push_back({stack_, prof});
            } else {
                if (segments_) {
                    TranscriptWriter w;
                    w.branch(d + 1, lab);
                    segments_->push_back({d + 1, d + 1, w.take(), -1});
                } else {
                    writer.branch(d + 1, lab);
                }
                ok = expand(d + 1, prof);
            }
            stack_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    const SearchConfig& cfg_;
    int p_, cap_, maxd_;
    long long tnum_, tden_;
    BluePathDP dp_;
    BudgetState* budget_;
    std::atomic<long>* cex_min_;
    long task_index_;
    std::vector<UpString> stack_, root_labels_, all_labels_;
    long long pending_ = 0;

    int split_ = -1;
    std::vector<Segment>* segments_ = nullptr;
    std::vector<TaskSeed>* seeds_ = nullptr;
};

// Task chunks persisted under a directory: manifest.json plus one file per
// completed task, so an interrupted run can resume without redoing them.
class CheckpointSpool {
public:
    CheckpointSpool(std::string dir, const SearchConfig& cfg, int split, long n_tasks, bool resume)
        : dir_(std::move(dir)), header_(cfg.header_line()), split_(split), n_(n_tasks) {
        namespace fs = std::filesystem;
        fs::create_directories(dir_);
        done_.assign(static_cast<std::size_t>(n_), 0);
        fs::path mpath = fs::path(dir_) / "manifest.json";
        if (resume && fs::exists(mpath)) {
            std::ifstream in(mpath);
            nlohmann::json m = nlohmann::json::parse(in);
            if (m.at("header").get<std::string>() != header_ ||
                m.at("split_depth").get<int>() != split_ || m.at("tasks").get<long>() != n_) {
                throw std::runtime_error("checkpoint directory holds a different run");
            }
            for (long k : m.at("completed").get<std::vector<long>>()) {
                if (k >= 0 && k < n_) done_[static_cast<std::size_t>(k)] = 1;
            }
        } else {
            write_manifest();
        }
    }

    bool completed(long k) const { return done_[static_cast<std::size_t>(k)] != 0; }

    bool load_chunk(long k, ChunkResult& out) const {
        std::ifstream in(chunk_path(k), std::ios::binary);
        if (!in) return false;
        std::string meta_line;
        if (!std::getline(in, meta_line)) return false;
        nlohmann::json m = nlohmann::json::parse(meta_line);
        out.final_depth = m.at("final_depth").get<int>();
        out.stats.nodes = m.at("nodes").get<long long>();
        out.stats.red_leaves = m.at("red_leaves").get<long long>();
        out.stats.blue_leaves = m.at("blue_leaves").get<long long>();
        out.stats.max_leaf_depth = m.at("max_leaf_depth").get<int>();
        out.stats.deepest_endpoint = m.at("deepest_endpoint").get<int>();
        std::ostringstream rest;
        rest << in.rdbuf();
        out.bytes = rest.str();
        out.state = ChunkResult::Done;
        return true;
    }

    void store_chunk(long k, const ChunkResult& r) {
        namespace fs = std::filesystem;
        nlohmann::json m{{"final_depth", r.final_depth},
                         {"nodes", r.stats.nodes},
                         {"red_leaves", r.stats.red_leaves},
                         {"blue_leaves", r.stats.blue_leaves},
                         {"max_leaf_depth", r.stats.max_leaf_depth},
                         {"deepest_endpoint", r.stats.deepest_endpoint}};
        fs::path tmp = fs::path(dir_) / ("task_" + std::to_string(k) + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary);
            out << m.dump() << '\n' << r.bytes;
        }
        fs::rename(tmp, chunk_path(k));
        done_[static_cast<std::size_t>(k)] = 1;
        write_manifest();
    }

private:
    std::filesystem::path chunk_path(long k) const {
        return std::filesystem::path(dir_) / ("task_" + std::to_string(k) + ".chunk");
    }

    void write_manifest() {
        namespace fs = std::filesystem;
        std::vector<long> completed;
        for (long k = 0; k < n_; ++k) {
            if (done_[static_cast<std::size_t>(k)]) completed.push_back(k);
        }
        nlohmann::json m{{"format", 1},
                         {"header", header_},
                         {"split_depth", split_},
                         {"tasks", n_},
                         {"completed", completed}};
        fs::path tmp = fs::path(dir_) / "manifest.tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            out << m.dump() << '\n';
        }
        fs::rename(tmp, fs::path(dir_) / "manifest.json");
    }

    std::string dir_;
    std::string header_;
    int split_;
    long n_;
    std::vector<char> done_;
};

SearchOutcome finish_failure(const SearchConfig& cfg, std::vector<UpString> cex,
                             SearchStats stats) {
    if (!replay_counterexample(cfg, cex)) {
        throw std::logic_error("search produced a counterexample that fails replay");
    }
    SearchOutcome out;
    out.status = SearchStatus::Failure;
    out.counterexample = std::move(cex);
    out.stats = stats;
    return out;
}

}  // namespace

bool replay_counterexample(const SearchConfig& cfg, const std::vector<UpString>& cex) {
    if (static_cast<int>(cex.size()) != cfg.max_depth + 1) return false;
    for (const UpString& u : cex) {
        if (u.length() != cfg.power) return false;
    }
    if (!cfg.start_pred.matches(cex.front())) return false;
    UpColoring c(PowerPathGraph(cfg.n_vertices(), cfg.power), cex);
    return std::holds_alternative<std::monostate>(find_closing_certificate(c, cfg));
}

std::string counterexample_file(const SearchConfig& cfg, const std::vector<UpString>& cex) {
    std::string out = cfg.header_line();
    out += "\n{\"counterexample\":[";
    for (std::size_t i = 0; i < cex.size(); ++i) {
        if (i > 0) out += ',';
        out += '"';
        out += cex[i].to_string();
        out += '"';
    }
    out += "]}\n";
    return out;
}

SearchOutcome segment_search_serial(const SearchConfig& cfg, const SearchBudget& budget) {
    cfg.validate();
    BudgetState bs(budget);
    SearchCore core(cfg, &bs, nullptr, 0);
    bool ok = core.run_root();
    if (ok) {
        core.writer.pop_to_root();
        SearchOutcome out;
        out.status = SearchStatus::Success;
        out.transcript = cfg.header_line();
        out.transcript += '\n';
        out.transcript += core.writer.take();
        out.stats = core.stats;
        return out;
    }
    if (!core.failure_cex.empty()) return finish_failure(cfg, core.failure_cex, core.stats);
    SearchOutcome out;
    out.status = SearchStatus::Budget;
    out.stats = core.stats;
    return out;
}

SearchOutcome segment_search(const SearchConfig& cfg, const SearchOptions& opts) {
    cfg.validate();
    if (opts.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    int split = std::clamp(opts.split_depth, 1, cfg.max_depth);
    BudgetState bs(opts.budget);

    SearchCore skel(cfg, &bs, nullptr, 0);
    std::vector<Segment> segments;
    std::vector<TaskSeed> seeds;
    bool skel_ok = skel.run_skeleton(split, segments, seeds);
    if (!skel_ok) {
        if (!skel.failure_cex.empty()) return finish_failure(cfg, skel.failure_cex, skel.stats);
        SearchOutcome out;
        out.status = SearchStatus::Budget;
        out.stats = skel.stats;
        return out;
    }

    long n_tasks = static_cast<long>(seeds.size());
    std::vector<ChunkResult> results(static_cast<std::size_t>(n_tasks));
    std::unique_ptr<CheckpointSpool> spool;
    if (!opts.checkpoint_dir.empty()) {
        spool = std::make_unique<CheckpointSpool>(opts.checkpoint_dir, cfg, split, n_tasks,
                                                  opts.resume);
        for (long k = 0; k < n_tasks; ++k) {
            if (spool->completed(k)) {
                if (!spool->load_chunk(k, results[static_cast<std::size_t>(k)])) {
                    throw std::runtime_error("checkpoint chunk missing or unreadable");
                }
            }
        }
    }

    std::atomic<long> cex_min{LONG_MAX};

#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs) if (opts.jobs > 1)
    for (long k = 0; k < n_tasks; ++k) {
        ChunkResult& r = results[static_cast<std::size_t>(k)];
        if (r.state == ChunkResult::Done) continue;
        if (cex_min.load(std::memory_order_relaxed) < k) {
            r.state = ChunkResult::Stopped;
            continue;
        }
        SearchCore core(cfg, &bs, &cex_min, k);
        bool ok = core.run_subtree(seeds[static_cast<std::size_t>(k)].stack,
                                   seeds[static_cast<std::size_t>(k)].prof);
        r.stats = core.stats;
        if (ok) {
            r.bytes = core.writer.take();
            r.final_depth = core.writer.current_depth();
            r.state = ChunkResult::Done;
            if (spool) {
#pragma omp critical(ramsey_spool)
                spool->store_chunk(k, r);
            }
        } else if (!core.failure_cex.empty()) {
            r.state = ChunkResult::Failed;
            r.cex = core.failure_cex;
            atomic_min(cex_min, k);
        } else {
            r.state = ChunkResult::Stopped;
        }
    }

    SearchStats total = skel.stats;
    for (const ChunkResult& r : results) total.merge(r.stats);

    long first_failed = -1;
    bool any_stopped = false;
    for (long k = 0; k < n_tasks; ++k) {
        const ChunkResult& r = results[static_cast<std::size_t>(k)];
        if (r.state == ChunkResult::Failed && first_failed < 0) first_failed = k;
        if (r.state == ChunkResult::Stopped) any_stopped = true;
    }
    if (first_failed >= 0) {
        return finish_failure(cfg, results[static_cast<std::size_t>(first_failed)].cex, total);
    }
    if (any_stopped || bs.tripped.load(std::memory_order_relaxed)) {
        SearchOutcome out;
        out.status = SearchStatus::Budget;
        out.stats = total;
        return out;
    }

    std::string bytes = cfg.header_line();
    bytes += '\n';
    int cur = 0;
    for (const Segment& seg : segments) {
        const std::string* body = &seg.bytes;
        int final_depth = seg.final_depth;
        if (seg.task >= 0) {
            const ChunkResult& r = results[static_cast<std::size_t>(seg.task)];
            body = &r.bytes;
            final_depth = r.final_depth;
        }
        TranscriptWriter::append_boundary_pop(bytes, cur, seg.first_depth);
        bytes += *body;
        cur = final_depth;
    }
    if (cur > 0) {
        bytes += "{\"pop\":";
        bytes += std::to_string(cur);
        bytes += "}\n";
    }

    SearchOutcome out;
    out.status = SearchStatus::Success;
    out.transcript = std::move(bytes);
    out.stats = total;
    return out;
}

BoundReport theorem_assemble(const SearchConfig& cfg, const SearchOutcome& outcome, long long n) {
    cfg.validate();
    if (outcome.status != SearchStatus::Success) {
        throw std::invalid_argument("bound assembly needs a SUCCESS outcome");
    }
    if (n < 2) throw std::invalid_argument("path order must be at least 2");
    BoundReport r;
    r.density = cfg.target;
    r.window = cfg.max_depth + 2;
    r.n = n;
    Rational need = Rational(n - 1) / cfg.target + Rational(r.window);
    r.min_n_host = need.ceil();
    r.edge_bound = static_cast<long long>(cfg.power) * r.min_n_host -
                   static_cast<long long>(cfg.power) * (cfg.power + 1) / 2;
    r.coefficient = Rational(cfg.power) / cfg.target;
    r.note = "each stitched segment may have to start at its window's vertex 1 or 2, "
             "so a window charges max_depth + 2 vertices";
    return r;
}

}  // namespace ramsey
