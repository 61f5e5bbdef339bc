#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace numerov::cli {

inline constexpr int kSchemaVersion = 1;

/// 12 significant digits, shortest form.
std::string format_number(double v);
std::string format_number(std::int64_t v);
inline std::string format_number(int v) { return format_number(static_cast<std::int64_t>(v)); }

/// "# numerov <command> schema=1"
std::string schema_line(std::string_view command);

/// CSV writer: `#` metadata lines, one column line, then rows. Rows are
/// written through immediately, so a stream can be flushed mid-run.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::string_view command, std::vector<std::string> columns,
              const std::vector<std::string>& metadata = {});

    void row(const std::vector<std::string>& cells);
    void comment(std::string_view text);
    std::size_t columns() const { return columns_.size(); }

private:
    std::ostream& os_;
    std::vector<std::string> columns_;
};

/// Output file written as <path>.partial and renamed on commit(); the
/// partial file is removed when the object dies uncommitted.
class AtomicFile {
public:
    explicit AtomicFile(std::filesystem::path path);
    ~AtomicFile();
    AtomicFile(const AtomicFile&) = delete;
    AtomicFile& operator=(const AtomicFile&) = delete;

    std::ostream& stream() { return os_; }
    void commit();

private:
    std::filesystem::path path_;
    std::filesystem::path partial_;
    std::ofstream os_;
    bool committed_ = false;
};

} // namespace numerov::cli
