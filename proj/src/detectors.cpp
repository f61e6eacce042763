#include "entrokit/detectors.hpp"

#include "entrokit/data_dir.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entrokit::detect {
namespace {

using nlohmann::json;

// Minimal public-suffix list; a trailing match (longest first) is stripped
// before scoring.
const std::array<const char*, 50> kPublicSuffixes = {
    "co.uk",  "org.uk", "ac.uk",  "gov.uk", "com.au", "net.au", "org.au",
    "co.jp",  "co.kr",  "com.br", "com.cn", "com.mx", "co.in",  "co.za",
    "com",    "net",    "org",    "edu",    "gov",    "mil",    "int",
    "info",   "biz",    "io",     "co",     "ai",     "app",    "dev",
    "me",     "tv",     "cc",     "us",     "uk",     "de",     "fr",
    "jp",     "cn",     "ru",     "br",     "in",     "au",     "ca",
    "nl",     "it",     "es",     "se",     "ch",     "pl",     "eu",
    "xyz",
};

std::vector<std::string> split_labels(const std::string& host) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : host) {
        if (c == '.') {
            labels.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    labels.push_back(current);
    return labels;
}

// Drops the longest matching public suffix (at most two labels) and a
// leading "www" label, then returns the registrable label.
std::string registrable_label(const std::string& host) {
    auto labels = split_labels(host);
    auto matches_suffix = [&](std::size_t n) {
        if (labels.size() <= n) return false;
        std::string tail;
        for (std::size_t i = labels.size() - n; i < labels.size(); ++i) {
            if (!tail.empty()) tail.push_back('.');
            tail += labels[i];
        }
        return std::any_of(kPublicSuffixes.begin(), kPublicSuffixes.end(),
                           [&](const char* s) { return tail == s; });
    };
    if (matches_suffix(2))
        labels.resize(labels.size() - 2);
    else if (matches_suffix(1))
        labels.resize(labels.size() - 1);
    if (labels.size() > 1 && labels.front() == "www")
        labels.erase(labels.begin());
    return labels.empty() ? std::string() : labels.back();
}

LetterBaseline load_baseline() {
    const json doc = json::parse(read_data_file("dga_baseline.json"));
    LetterBaseline baseline;
    baseline.corpus_id = doc.at("corpus_id").get<std::string>();
    baseline.threshold_bits = doc.at("threshold_bits").get<double>();
    baseline.smoothing = doc.at("smoothing").get<double>();
    baseline.min_length = doc.at("min_length").get<int>();
    baseline.frequencies.probabilities =
        doc.at("frequencies").get<std::vector<double>>();
    if (baseline.frequencies.alphabet_size() != kDomainAlphabetSize)
        throw std::runtime_error("baseline alphabet size mismatch");
    baseline.frequencies.validate();
    return baseline;
}

std::string extension_of(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    if (!ext.empty() && ext.front() == '.') ext.erase(ext.begin());
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext;
}

}  // namespace

int domain_symbol_index(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= '0' && c <= '9') return 26 + (c - '0');
    if (c == '-') return 36;
    return -1;
}

const LetterBaseline& shipped_baseline() {
    static const LetterBaseline baseline = load_baseline();
    return baseline;
}

DgaVerdict score_domain(const std::string& domain,
                        const LetterBaseline& baseline, double smoothing) {
    std::string host;
    host.reserve(domain.size());
    for (char c : domain)
        host.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    std::string label = registrable_label(host);
    ByteHistogram hist(kDomainAlphabetSize);
    std::string kept;
    for (char c : label) {
        const int idx = domain_symbol_index(c);
        if (idx >= 0) {
            hist.add(static_cast<std::size_t>(idx));
            kept.push_back(c);
        }
    }
    if (hist.total == 0)
        throw std::invalid_argument("domain is empty after normalization: " +
                                    domain);

    DgaVerdict verdict;
    verdict.domain = domain;
    verdict.scored_label = kept;
    verdict.effective_label_length = static_cast<int>(kept.size());
    verdict.score_bits =
        relative_entropy(to_distribution(hist), baseline.frequencies,
                         smoothing);
    return verdict;
}

DgaVerdict classify_domain(DgaVerdict verdict, double threshold_bits,
                           int min_length) {
    verdict.threshold_bits = threshold_bits;
    verdict.label = (verdict.score_bits > threshold_bits &&
                     verdict.effective_label_length >= min_length)
                        ? DomainLabel::suspicious
                        : DomainLabel::benign;
    return verdict;
}

DgaVerdict evaluate_domain(const std::string& domain,
                           std::optional<double> threshold_override) {
    const LetterBaseline& baseline = shipped_baseline();
    DgaVerdict verdict = score_domain(domain, baseline, baseline.smoothing);
    return classify_domain(std::move(verdict),
                           threshold_override.value_or(baseline.threshold_bits),
                           baseline.min_length);
}

std::string to_string(FileLabel label) {
    switch (label) {
        case FileLabel::normal: return "normal";
        case FileLabel::high_entropy: return "high_entropy";
        case FileLabel::skipped: return "skipped";
    }
    throw std::logic_error("unreachable file label");
}

std::set<std::string> ScanPolicy::default_skip_extensions() {
    // Compressed or encrypted-by-design formats: high entropy is expected,
    // so they carry no ransomware signal.
    return {"zip", "gz",  "bz2", "xz",  "7z",  "rar", "zst", "jpg", "jpeg",
            "png", "gif", "webp", "mp3", "mp4", "mkv", "avi", "ogg", "flac",
            "pdf", "docx", "xlsx", "pptx", "gpg", "pgp", "enc"};
}

std::vector<FileEntropyFinding> scan_path(const std::filesystem::path& root,
                                          const ScanPolicy& policy) {
    std::error_code ec;
    const auto status = std::filesystem::status(root, ec);
    if (ec || !std::filesystem::exists(status))
        throw std::runtime_error("scan root does not exist: " + root.string());

    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_regular_file(status)) {
        files.push_back(root);
    } else {
        std::filesystem::recursive_directory_iterator it(
            root, std::filesystem::directory_options::skip_permission_denied,
            ec);
        if (ec)
            throw std::runtime_error("cannot read scan root: " + root.string() +
                                     ": " + ec.message());
        for (const auto& entry : it)
            if (entry.is_regular_file(ec) && !ec) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<FileEntropyFinding> findings;
    findings.reserve(files.size());
    for (const auto& path : files) {
        FileEntropyFinding finding;
        finding.path = path.generic_string();

        std::ifstream in(path, std::ios::binary);
        if (!in) {
            finding.label = FileLabel::skipped;
            finding.skip_reason = "unreadable";
            findings.push_back(std::move(finding));
            continue;
        }
        ByteHistogram hist(256);
        std::array<char, 65536> buffer;
        while (in.read(buffer.data(), buffer.size()) || in.gcount() > 0) {
            const auto n = static_cast<std::size_t>(in.gcount());
            for (std::size_t i = 0; i < n; ++i)
                ++hist.counts[static_cast<std::uint8_t>(buffer[i])];
            hist.total += n;
        }
        finding.size_bytes = hist.total;
        if (hist.total > 0)
            finding.entropy_bits_per_byte =
                shannon_entropy(to_distribution(hist), hist.total)
                    .entropy_bits_per_symbol;

        const std::string ext = extension_of(path);
        if (policy.skip_extensions.count(ext)) {
            finding.label = FileLabel::skipped;
            finding.skip_reason = "extension on skip-list";
        } else if (finding.size_bytes < policy.min_size_bytes) {
            finding.label = FileLabel::skipped;
            finding.skip_reason = "below minimum size";
        } else if (finding.entropy_bits_per_byte >
                   policy.threshold_bits_per_byte) {
            finding.label = FileLabel::high_entropy;
        } else {
            finding.label = FileLabel::normal;
        }
        findings.push_back(std::move(finding));
    }
    return findings;
}

std::string findings_to_jsonl(const std::vector<FileEntropyFinding>& findings) {
    std::ostringstream out;
    for (const auto& f : findings) {
        json line{{"path", f.path},
                  {"entropy_bits_per_byte", f.entropy_bits_per_byte},
                  {"size_bytes", f.size_bytes},
                  {"label", to_string(f.label)}};
        if (!f.skip_reason.empty()) line["skip_reason"] = f.skip_reason;
        out << line.dump() << '\n';
    }
    return out.str();
}

std::vector<FileEntropyFinding> findings_from_jsonl(const std::string& text) {
    std::vector<FileEntropyFinding> findings;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json doc = json::parse(line);
        FileEntropyFinding f;
        f.path = doc.at("path").get<std::string>();
        f.entropy_bits_per_byte = doc.at("entropy_bits_per_byte").get<double>();
        f.size_bytes = doc.at("size_bytes").get<std::uint64_t>();
        const auto label = doc.at("label").get<std::string>();
        if (label == "normal")
            f.label = FileLabel::normal;
        else if (label == "high_entropy")
            f.label = FileLabel::high_entropy;
        else if (label == "skipped")
            f.label = FileLabel::skipped;
        else
            throw std::invalid_argument("unknown finding label: " + label);
        if (doc.contains("skip_reason"))
            f.skip_reason = doc.at("skip_reason").get<std::string>();
        findings.push_back(std::move(f));
    }
    return findings;
}

SnapshotDelta compare_snapshots(const std::vector<FileEntropyFinding>& before,
                                const std::vector<FileEntropyFinding>& after,
                                double delta_threshold,
                                double alert_fraction) {
    std::map<std::string, const FileEntropyFinding*> before_by_path;
    for (const auto& f : before) before_by_path[f.path] = &f;

    SnapshotDelta delta;
    std::set<std::string> seen;
    for (const auto& f : after) {
        const auto it = before_by_path.find(f.path);
        if (it == before_by_path.end()) {
            if (f.label == FileLabel::high_entropy) ++delta.new_high_entropy;
            continue;
        }
        seen.insert(f.path);
        ++delta.compared_files;
        if (f.entropy_bits_per_byte - it->second->entropy_bits_per_byte >=
            delta_threshold) {
            ++delta.flagged_files;
            delta.flagged_paths.push_back(f.path);
        }
    }
    for (const auto& f : before)
        if (!seen.count(f.path)) ++delta.removed_files;

    if (delta.compared_files > 0)
        delta.flagged_fraction = static_cast<double>(delta.flagged_files) /
                                 static_cast<double>(delta.compared_files);
    delta.alert = delta.flagged_fraction >= alert_fraction;
    return delta;
}

}  // namespace entrokit::detect
