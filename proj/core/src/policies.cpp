#include "paging/policies.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace paging {
namespace detail {

CacheCore::CacheCore(int k, std::size_t num_pages) : k_(k) {
    if (k < 1) throw std::invalid_argument("policy cache size must be at least 1");
    pos_.assign(num_pages, kAbsent);
    resident_.reserve(static_cast<std::size_t>(k));
}

void CacheCore::load(PageId p) {
    assert(!resident(p) && !full());
    pos_[p] = static_cast<std::uint32_t>(resident_.size());
    resident_.push_back(p);
}

void CacheCore::evict(PageId p) {
    const std::uint32_t i = pos_[p];
    assert(i != kAbsent);
    resident_[i] = resident_.back();
    pos_[resident_[i]] = i;
    resident_.pop_back();
    pos_[p] = kAbsent;
}

namespace {

/// Uniform pick over a sorted candidate list by index, for reproducibility.
PageId pick_uniform(std::vector<PageId>& candidates, CounterRng& rng) {
    assert(!candidates.empty());
    std::sort(candidates.begin(), candidates.end());
    return candidates[rng.uniform_below(candidates.size())];
}

CacheSnapshot snapshot_of(const CacheCore& cache, const std::vector<std::uint8_t>* marked,
                          const std::vector<Bit>* bits) {
    CacheSnapshot snap;
    snap.resident = cache.resident_pages();
    std::sort(snap.resident.begin(), snap.resident.end());
    snap.marked.reserve(snap.resident.size());
    snap.page_bits.reserve(snap.resident.size());
    for (PageId p : snap.resident) {
        snap.marked.push_back(marked ? (*marked)[p] : 0);
        snap.page_bits.push_back(bits ? (*bits)[p] : 0);
    }
    return snap;
}

}  // namespace
}  // namespace detail

using detail::pick_uniform;
using detail::snapshot_of;

// ---------------------------------------------------------------- LRU / FIFO

LruPolicy::LruPolicy(int k, std::size_t num_pages)
    : Policy(k), cache_(k, num_pages), last_use_(num_pages, 0) {}

StepOutcome LruPolicy::serve(PageId page, Bit) {
    StepOutcome out;
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full()) {
            PageId victim = cache_.resident_pages().front();
            for (PageId p : cache_.resident_pages())
                if (last_use_[p] < last_use_[victim]) victim = p;
            cache_.evict(victim);
            out.evictions.push_back(victim);
        }
        cache_.load(page);
    }
    last_use_[page] = ++tick_;
    return out;
}

CacheSnapshot LruPolicy::snapshot() const { return snapshot_of(cache_, nullptr, nullptr); }

FifoPolicy::FifoPolicy(int k, std::size_t num_pages)
    : Policy(k), cache_(k, num_pages), load_time_(num_pages, 0) {}

StepOutcome FifoPolicy::serve(PageId page, Bit) {
    StepOutcome out;
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full()) {
            PageId victim = cache_.resident_pages().front();
            for (PageId p : cache_.resident_pages())
                if (load_time_[p] < load_time_[victim]) victim = p;
            cache_.evict(victim);
            out.evictions.push_back(victim);
        }
        cache_.load(page);
        load_time_[page] = ++tick_;
    }
    return out;
}

CacheSnapshot FifoPolicy::snapshot() const { return snapshot_of(cache_, nullptr, nullptr); }

// ----------------------------------------------------------------------- Mark

MarkPolicy::MarkPolicy(int k, std::size_t num_pages, std::uint64_t seed)
    : Policy(k), cache_(k, num_pages), marked_(num_pages, 0), rng_(seed) {}

StepOutcome MarkPolicy::serve(PageId page, Bit) {
    StepOutcome out;
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full()) {
            std::vector<PageId> unmarked;
            for (PageId p : cache_.resident_pages())
                if (!marked_[p]) unmarked.push_back(p);
            if (unmarked.empty()) {  // new k-phase
                for (PageId p : cache_.resident_pages()) marked_[p] = 0;
                unmarked = cache_.resident_pages();
            }
            PageId victim = pick_uniform(unmarked, rng_);
            assert(!marked_[victim]);
            cache_.evict(victim);
            out.evictions.push_back(victim);
        }
        cache_.load(page);
    }
    marked_[page] = 1;
    return out;
}

CacheSnapshot MarkPolicy::snapshot() const { return snapshot_of(cache_, &marked_, nullptr); }

// --------------------------------------------------------------------- flush0

FlushOnAllZeroPolicy::FlushOnAllZeroPolicy(int k, std::size_t num_pages)
    : Policy(k), cache_(k, num_pages), bits_(num_pages, 0) {}

StepOutcome FlushOnAllZeroPolicy::serve(PageId page, Bit bit) {
    StepOutcome out;
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full()) {
            PageId one_page = 0;
            bool found = false;
            for (PageId p : cache_.resident_pages())
                if (bits_[p] == 1 && (!found || p < one_page)) {
                    one_page = p;
                    found = true;
                }
            if (found) {
                cache_.evict(one_page);
                out.evictions.push_back(one_page);
            } else {
                out.evictions = cache_.resident_pages();
                std::sort(out.evictions.begin(), out.evictions.end());
                for (PageId p : out.evictions) cache_.evict(p);
                ++flushes_;
            }
        }
        cache_.load(page);
    }
    bits_[page] = bit;
    return out;
}

CacheSnapshot FlushOnAllZeroPolicy::snapshot() const {
    return snapshot_of(cache_, nullptr, &bits_);
}

// ---------------------------------------------------------------------- Mark0

Mark0Policy::Mark0Policy(int k, std::size_t num_pages, std::uint64_t seed)
    : Policy(k),
      cache_(k, num_pages),
      marked_(num_pages, 0),
      in_s_(num_pages, 0),
      bits_(num_pages, 0),
      forced_(1, 0),
      rng_(seed) {}

std::vector<PageId> Mark0Policy::unmarked_s_in_cache() const {
    std::vector<PageId> out;
    for (PageId p : cache_.resident_pages())
        if (in_s_[p] && !marked_[p]) out.push_back(p);
    return out;
}

StepOutcome Mark0Policy::serve(PageId page, Bit bit) {
    StepOutcome out;
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full() && unmarked_s_in_cache().empty()) {
            // New phase: S becomes the current cache content, all marks drop.
            std::fill(in_s_.begin(), in_s_.end(), 0);
            for (PageId p : cache_.resident_pages()) in_s_[p] = 1;
            std::fill(marked_.begin(), marked_.end(), 0);
            forced_.push_back(0);
        }
        if (in_s_[page] && !marked_[page]) {
            // S-replacement: performed even if the cache is not full.
            std::vector<PageId> candidates = unmarked_s_in_cache();
            if (!candidates.empty()) {
                PageId victim = pick_uniform(candidates, rng_);
                cache_.evict(victim);
                out.evictions.push_back(victim);
                ++zero_evictions_;
            }
        }
        if (cache_.full()) {
            std::vector<PageId> candidates = unmarked_s_in_cache();
            if (candidates.empty())
                throw std::logic_error(
                    "mark0: full cache with no unmarked S-page (internal consistency fault)");
            PageId victim = pick_uniform(candidates, rng_);
            cache_.evict(victim);
            out.evictions.push_back(victim);
            ++zero_evictions_;
            ++forced_.back();
        }
        cache_.load(page);
    }
    marked_[page] = 1;
    bits_[page] = bit;
    if (bit == 1) {
        cache_.evict(page);
        out.evictions.push_back(page);
    }
    return out;
}

std::vector<PageId> Mark0Policy::tracked_set() const {
    std::vector<PageId> out;
    for (PageId p = 0; p < in_s_.size(); ++p)
        if (in_s_[p]) out.push_back(p);
    return out;
}

CacheSnapshot Mark0Policy::snapshot() const { return snapshot_of(cache_, &marked_, &bits_); }

// --------------------------------------------------------------- Mark&Predict

MarkPredictPolicy::MarkPredictPolicy(int k, std::size_t num_pages, std::uint64_t seed,
                                     bool deterministic_1_evictions)
    : Policy(k),
      cache_(k, num_pages),
      marked_(num_pages, 0),
      bits_(num_pages, 0),
      phase_stamp_(num_pages, 0),
      last_use_(num_pages, 0),
      det_mode_(deterministic_1_evictions),
      rng_(seed) {}

void MarkPredictPolicy::begin_phase(std::uint64_t request_index) {
    ++current_phase_;
    phase_starts_.push_back(request_index);
    if (current_phase_ > 1) {
        finished_new_pages_.push_back(current_new_pages_);
        current_new_pages_ = 0;
    }
    for (PageId p : cache_.resident_pages()) {
        phase_stamp_[p] = current_phase_;
        marked_[p] = 0;
    }
}

StepOutcome MarkPredictPolicy::serve(PageId page, Bit bit) {
    StepOutcome out;
    if (current_phase_ == 0) begin_phase(request_index_);
    if (!cache_.resident(page)) {
        out.fault = true;
        if (cache_.full()) {
            bool any_unmarked = false;
            for (PageId p : cache_.resident_pages())
                if (!marked_[p]) {
                    any_unmarked = true;
                    break;
                }
            if (!any_unmarked) begin_phase(request_index_);

            std::vector<PageId> ones, zeros;
            for (PageId p : cache_.resident_pages()) {
                if (marked_[p]) continue;
                (bits_[p] == 1 ? ones : zeros).push_back(p);
            }
            PageId victim;
            if (!ones.empty()) {
                if (det_mode_) {
                    victim = ones.front();
                    for (PageId p : ones)
                        if (last_use_[p] < last_use_[victim]) victim = p;
                } else {
                    victim = pick_uniform(ones, rng_);
                }
            } else {
                victim = pick_uniform(zeros, rng_);
            }
            assert(!marked_[victim]);
            cache_.evict(victim);
            out.evictions.push_back(victim);
        }
        cache_.load(page);
        if (phase_stamp_[page] != current_phase_) ++current_new_pages_;
    }
    marked_[page] = 1;
    bits_[page] = bit;
    last_use_[page] = ++tick_;
    ++request_index_;
    return out;
}

std::vector<std::uint64_t> MarkPredictPolicy::new_pages_per_phase() const {
    std::vector<std::uint64_t> out = finished_new_pages_;
    if (current_phase_ > 0) out.push_back(current_new_pages_);
    return out;
}

CacheSnapshot MarkPredictPolicy::snapshot() const {
    return snapshot_of(cache_, &marked_, &bits_);
}

// -------------------------------------------------------------------- factory

bool is_known_policy(const std::string& id) {
    for (const char* known : kPolicyIds)
        if (id == known) return true;
    return false;
}

bool policy_uses_predictions(const std::string& id) {
    return id == "flush0" || id == "mark0" || id == "mark-predict" || id == "mark-predict-det";
}

std::unique_ptr<Policy> make_policy(const std::string& id, int k, std::size_t num_pages,
                                    std::uint64_t seed) {
    if (id == "lru") return std::make_unique<LruPolicy>(k, num_pages);
    if (id == "fifo") return std::make_unique<FifoPolicy>(k, num_pages);
    if (id == "mark") return std::make_unique<MarkPolicy>(k, num_pages, seed);
    if (id == "flush0") return std::make_unique<FlushOnAllZeroPolicy>(k, num_pages);
    if (id == "mark0") return std::make_unique<Mark0Policy>(k, num_pages, seed);
    if (id == "mark-predict") return std::make_unique<MarkPredictPolicy>(k, num_pages, seed, false);
    if (id == "mark-predict-det")
        return std::make_unique<MarkPredictPolicy>(k, num_pages, seed, true);
    throw std::invalid_argument("unknown policy: " + id);
}

RunReport run_policy(Policy& policy, const Trace& trace, std::span<const Bit> predictions,
                     bool keep_log) {
    require_valid(trace);
    if (predictions.size() != trace.size())
        throw std::invalid_argument("run_policy: prediction sequence length mismatch");
    RunReport report;
    report.fault_flags.assign(trace.size(), 0);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        StepOutcome out = policy.serve(trace.requests[i], predictions[i]);
        if (out.fault) {
            report.fault_flags[i] = 1;
            ++report.faults;
        }
        report.evictions += out.evictions.size();
        if (keep_log)
            for (PageId p : out.evictions)
                report.eviction_log.emplace_back(static_cast<std::uint32_t>(i), p);
    }
    return report;
}

RunReport run_policy(Policy& policy, const Trace& trace, bool keep_log) {
    if (trace.setup == Setup::none && policy_uses_predictions(std::string(policy.name())))
        throw std::invalid_argument("trace has setup=none; prediction-aware policies reject it");
    return run_policy(policy, trace, trace.predictions, keep_log);
}

}  // namespace paging
