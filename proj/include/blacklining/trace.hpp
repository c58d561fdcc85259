#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace blacklining {

enum class ChannelKind { CpuLoad, MemoryBus, Cache };

enum class LabelKind { Normal, Attack };

struct TraceLabel {
    LabelKind kind = LabelKind::Normal;
    std::optional<ChannelKind> channel;  // set iff kind == Attack

    bool operator==(const TraceLabel&) const = default;
};

std::string to_string(ChannelKind kind);                 // "cpu_load" etc.
ChannelKind channel_from_string(const std::string& s);

// An ordered sequence of shared-resource request times in integer
// microseconds, optionally carrying its ground-truth label. Immutable after
// construction; construction rejects (never repairs) unordered input.
class TimingTrace {
public:
    TimingTrace() = default;
    TimingTrace(std::vector<std::int64_t> timestamps_us,
                std::string source_id = "",
                std::optional<TraceLabel> label = std::nullopt);

    const std::vector<std::int64_t>& timestamps() const { return ts_; }
    const std::string& source_id() const { return source_id_; }
    const std::optional<TraceLabel>& label() const { return label_; }
    std::size_t size() const { return ts_.size(); }
    bool empty() const { return ts_.empty(); }

    bool operator==(const TimingTrace&) const = default;

private:
    std::vector<std::int64_t> ts_;
    std::string source_id_;
    std::optional<TraceLabel> label_;
};

// Inter-arrival gaps in microseconds; length is trace size - 1.
struct IntervalSeries {
    std::vector<double> values;
};

enum class TraceFormat { Jsonl, Csv };

// JSON Lines: one header record {"source_id":..,"label":..,"channel":..}
// followed by one {"ts_us": <int>} per event. A first line that already
// carries "ts_us" is accepted as a headerless, unlabeled trace.
// CSV: single `ts_us` column; the label travels in a `<path>.label` sidecar
// (absent sidecar = unlabeled), keeping the CSV itself a plain one-column
// export compatible with cluster-trace dumps.
TimingTrace load_trace(const std::filesystem::path& path, TraceFormat format);
void save_trace(const TimingTrace& trace, const std::filesystem::path& path,
                TraceFormat format);

}  // namespace blacklining
