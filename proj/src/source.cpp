#include "barrc/source.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <system_error>

namespace barrc {

std::size_t PhysicalLine::terminator_length() const {
    switch (terminator) {
        case LineTerminator::CRLF:
            return 2;
        case LineTerminator::LF:
        case LineTerminator::CR:
            return 1;
        case LineTerminator::None:
            break;
    }
    return 0;
}

std::string_view terminator_text(LineTerminator t) {
    switch (t) {
        case LineTerminator::LF:
            return "\n";
        case LineTerminator::CRLF:
            return "\r\n";
        case LineTerminator::CR:
            return "\r";
        case LineTerminator::None:
            break;
    }
    return "";
}

SourceFile::SourceFile(std::filesystem::path path, std::string bytes)
    : path_(std::move(path)), bytes_(std::move(bytes)) {
    std::size_t start = 0;
    std::size_t i = 0;
    const std::size_t n = bytes_.size();
    while (i < n) {
        char c = bytes_[i];
        if (c == '\n' || c == '\r') {
            PhysicalLine line;
            line.offset = start;
            line.length = i - start;
            if (c == '\r' && i + 1 < n && bytes_[i + 1] == '\n') {
                line.terminator = LineTerminator::CRLF;
                i += 2;
            } else {
                line.terminator = c == '\n' ? LineTerminator::LF : LineTerminator::CR;
                i += 1;
            }
            lines_.push_back(line);
            start = i;
        } else {
            ++i;
        }
    }
    if (start < n) {
        lines_.push_back(PhysicalLine{start, n - start, LineTerminator::None});
    }
}

std::string_view SourceFile::line_text(int line) const {
    const auto& l = this->line(line);
    return std::string_view(bytes_).substr(l.offset, l.length);
}

SourcePos SourceFile::pos_of(std::size_t offset) const {
    if (lines_.empty()) {
        return SourcePos{1, 1};
    }
    // First line whose offset is greater than `offset`, then step back.
    auto it = std::upper_bound(lines_.begin(), lines_.end(), offset,
                               [](std::size_t off, const PhysicalLine& l) { return off < l.offset; });
    if (it == lines_.begin()) {
        return SourcePos{1, 1};
    }
    --it;
    if (offset >= it->end_offset() && it->terminator != LineTerminator::None) {
        // Past the final terminator: first column of a virtual next line.
        return SourcePos{static_cast<int>(lines_.size()) + 1, 1};
    }
    int line = static_cast<int>(std::distance(lines_.begin(), it)) + 1;
    return SourcePos{line, static_cast<int>(offset - it->offset) + 1};
}

Span SourceFile::span_of(std::size_t begin, std::size_t end) const {
    return Span{begin, end, pos_of(begin), pos_of(end)};
}

bool SourceFile::is_blank_line(int line) const {
    auto text = line_text(line);
    return std::all_of(text.begin(), text.end(), [](char c) { return c == ' ' || c == '\t' || c == '\f'; });
}

SourceFile load_source(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw IoError("cannot read '" + path.string() + "': not a regular file");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return SourceFile(path, std::move(bytes));
}

SpliceResult splice_lines(const SourceFile& file) {
    SpliceResult result;
    const int count = file.line_count();
    int line = 1;
    while (line <= count) {
        LogicalLine logical{line, line, false};
        while (true) {
            auto text = file.line_text(logical.last_line);
            bool continues = !text.empty() && text.back() == '\\';
            if (!continues) {
                break;
            }
            if (file.line(logical.last_line).terminator == LineTerminator::None ||
                logical.last_line == count) {
                result.dangling_continuations.push_back(logical.last_line);
                break;
            }
            ++logical.last_line;
            logical.spliced = true;
        }
        result.lines.push_back(logical);
        line = logical.last_line + 1;
    }
    return result;
}

}  // namespace barrc
