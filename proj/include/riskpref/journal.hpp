#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <fstream>
#include <string>

namespace riskpref {

/// One prompt/answer exchange, keyed by the prompt digest for replay.
struct JournalEntry {
    std::string prompt_digest;
    std::string prompt;
    std::string answer;
    std::string backend;
    std::string timestamp;
};

/// Append-only line-delimited JSON journal. Thread-safe.
class JournalWriter {
public:
    explicit JournalWriter(const std::filesystem::path& path);

    void append(const std::string& prompt, const std::string& answer, const std::string& backend);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mutex_;
};

/// Read side of a journal: prompt digest -> recorded answer. Duplicate
/// digests resolve last-write-wins with a warning on stderr.
class Journal {
public:
    static Journal load(const std::filesystem::path& path);

    /// Recorded answer for a prompt digest, or throws MissError.
    const std::string& answer_for(const std::string& prompt_digest) const;

    bool contains(const std::string& prompt_digest) const;
    std::size_t size() const { return answers_.size(); }

private:
    std::map<std::string, std::string> answers_;
};

}  // namespace riskpref
