#include "numerov/cli/csv.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "numerov/cli/run_config.hpp"

namespace numerov::cli {

std::string format_number(double v)
{
    if (v == 0.0) return "0";  // no "-0" in output
    return fmt::format("{:.12g}", v);
}

std::string format_number(std::int64_t v) { return fmt::format("{}", v); }

std::string schema_line(std::string_view command)
{
    return fmt::format("# numerov {} schema={}", command, kSchemaVersion);
}

CsvWriter::CsvWriter(std::ostream& os, std::string_view command, std::vector<std::string> columns,
                     const std::vector<std::string>& metadata)
    : os_(os), columns_(std::move(columns))
{
    os_ << schema_line(command) << '\n';
    for (const auto& m : metadata) os_ << "# " << m << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << columns_[i];
    os_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells)
{
    if (cells.size() != columns_.size())
        throw std::logic_error(fmt::format("csv row has {} cells, header has {}", cells.size(), columns_.size()));
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << '\n';
    os_.flush();
}

void CsvWriter::comment(std::string_view text)
{
    os_ << "# " << text << '\n';
    os_.flush();
}

AtomicFile::AtomicFile(std::filesystem::path path) : path_(std::move(path))
{
    partial_ = path_;
    partial_ += ".partial";
    os_.open(partial_, std::ios::out | std::ios::trunc);
    if (!os_) throw UsageError("cannot write " + partial_.string());
}

AtomicFile::~AtomicFile()
{
    if (committed_) return;
    os_.close();
    std::error_code ec;
    std::filesystem::remove(partial_, ec);
}

void AtomicFile::commit()
{
    os_.close();
    if (!os_) throw UsageError("failed writing " + partial_.string());
    std::filesystem::rename(partial_, path_);
    committed_ = true;
}

} // namespace numerov::cli
