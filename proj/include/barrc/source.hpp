#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace barrc {

/// 1-based physical line and 1-based byte column.
struct SourcePos {
    int line = 1;
    int column = 1;

    auto operator<=>(const SourcePos&) const = default;
};

/// Half-open byte range [begin, end) plus the positions of both ends.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    SourcePos start;
    SourcePos stop;
};

enum class LineTerminator { LF, CRLF, CR, None };

struct PhysicalLine {
    std::size_t offset = 0;  // first byte of the line
    std::size_t length = 0;  // content bytes, terminator excluded
    LineTerminator terminator = LineTerminator::None;

    std::size_t terminator_length() const;
    std::size_t end_offset() const { return offset + length + terminator_length(); }
};

struct LogicalLine {
    int first_line = 1;
    int last_line = 1;
    bool spliced = false;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable raw file contents with its physical line table.
class SourceFile {
public:
    SourceFile() = default;
    SourceFile(std::filesystem::path path, std::string bytes);

    const std::filesystem::path& path() const { return path_; }
    const std::string& bytes() const { return bytes_; }
    const std::vector<PhysicalLine>& lines() const { return lines_; }
    int line_count() const { return static_cast<int>(lines_.size()); }

    /// Content of a physical line (1-based), without its terminator.
    std::string_view line_text(int line) const;
    const PhysicalLine& line(int line) const { return lines_.at(static_cast<std::size_t>(line - 1)); }

    /// Position of a byte offset; offset == size() maps past the last byte.
    SourcePos pos_of(std::size_t offset) const;
    Span span_of(std::size_t begin, std::size_t end) const;

    bool is_blank_line(int line) const;

private:
    std::filesystem::path path_;
    std::string bytes_;
    std::vector<PhysicalLine> lines_;
};

std::string_view terminator_text(LineTerminator t);

/// Reads a file verbatim. Throws IoError when the path is not a readable regular file.
SourceFile load_source(const std::filesystem::path& path);

struct SpliceResult {
    std::vector<LogicalLine> lines;
    /// Physical line of a backslash continuation with nothing to continue into.
    std::vector<int> dangling_continuations;
};

SpliceResult splice_lines(const SourceFile& file);

}  // namespace barrc
