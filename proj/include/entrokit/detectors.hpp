// Entropy-based threat detectors: DGA domain scoring via relative entropy
// of letter frequencies, and ransomware detection via file-entropy scans.

#pragma once

#include "entrokit/entropy.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace entrokit::detect {

/// a-z, 0-9 and hyphen; 37 symbols.
inline constexpr std::size_t kDomainAlphabetSize = 37;

/// Maps a domain character to its alphabet index, or -1 if outside.
int domain_symbol_index(char c);

struct LetterBaseline {
    ProbabilityDistribution frequencies;  // over the 37-symbol alphabet
    std::string corpus_id;
    double threshold_bits = 0.0;  // calibrated classification threshold
    double smoothing = 0.001;     // additive probability smoothing
    int min_length = 6;           // shortest label worth judging
};

/// Loads the shipped baseline (data/dga_baseline.json).
const LetterBaseline& shipped_baseline();

enum class DomainLabel { benign, suspicious };

struct DgaVerdict {
    std::string domain;
    double score_bits = 0.0;
    double threshold_bits = 0.0;
    DomainLabel label = DomainLabel::benign;
    int effective_label_length = 0;
    std::string scored_label;  // the registrable label actually scored
};

/// Scores D_KL(observed || smoothed baseline) in bits over the registrable
/// label. Normalization lowercases, strips a trailing public-suffix label
/// and a leading "www" label, and drops characters outside the alphabet.
/// Throws std::invalid_argument when nothing remains.
DgaVerdict score_domain(const std::string& domain,
                        const LetterBaseline& baseline, double smoothing);

/// Applies the labeling rule: suspicious iff score > threshold and the
/// effective label length is at least min_length.
DgaVerdict classify_domain(DgaVerdict verdict, double threshold_bits,
                           int min_length);

/// Score with the shipped baseline's smoothing, then classify with its
/// calibrated threshold (or an override).
DgaVerdict evaluate_domain(const std::string& domain,
                           std::optional<double> threshold_override = {});

enum class FileLabel { normal, high_entropy, skipped };

std::string to_string(FileLabel label);

struct FileEntropyFinding {
    std::string path;
    double entropy_bits_per_byte = 0.0;
    std::uint64_t size_bytes = 0;
    FileLabel label = FileLabel::normal;
    std::string skip_reason;  // set only for skipped files
};

struct ScanPolicy {
    double threshold_bits_per_byte = 7.2;
    std::uint64_t min_size_bytes = 1024;
    std::set<std::string> skip_extensions = default_skip_extensions();

    static std::set<std::string> default_skip_extensions();
};

/// One finding per regular file under root, sorted by path. Files below
/// min_size or with skip-listed extensions are labeled skipped; per-file
/// read errors become skipped findings with a reason. Throws
/// std::runtime_error when root itself is unreadable or missing.
std::vector<FileEntropyFinding> scan_path(const std::filesystem::path& root,
                                          const ScanPolicy& policy = {});

/// JSON-lines serialization of scan findings (one object per line).
std::string findings_to_jsonl(const std::vector<FileEntropyFinding>& findings);
std::vector<FileEntropyFinding> findings_from_jsonl(const std::string& text);

struct SnapshotDelta {
    std::uint64_t compared_files = 0;
    std::uint64_t flagged_files = 0;       // entropy rose by >= delta
    std::uint64_t new_high_entropy = 0;    // only in the after snapshot
    std::uint64_t removed_files = 0;       // only in the before snapshot
    double flagged_fraction = 0.0;
    bool alert = false;
    std::vector<std::string> flagged_paths;
};

/// Flags files whose entropy increased by >= delta_threshold bits/byte;
/// raises the overall alert when the flagged fraction reaches
/// alert_fraction.
SnapshotDelta compare_snapshots(
    const std::vector<FileEntropyFinding>& before,
    const std::vector<FileEntropyFinding>& after, double delta_threshold,
    double alert_fraction = 0.2);

}  // namespace entrokit::detect
