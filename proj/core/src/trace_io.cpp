#include "paging/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace paging {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw TraceIoError(source + ":" + std::to_string(line) + ": " + what);
}

std::uint64_t parse_u64(std::string_view token, const std::string& source, std::size_t line,
                        const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(source, line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    return value;
}

}  // namespace

Trace read_trace(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) fail(source, 1, "missing header line");

    Trace header;
    {
        if (line.rfind("k=", 0) != 0) fail(source, 1, "header must start with k=<int>");
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos) fail(source, 1, "header missing setup field");
        header.cache_size = static_cast<int>(
            parse_u64(std::string_view(line).substr(2, sp - 2), source, 1, "cache size"));
        if (header.cache_size < 1) fail(source, 1, "cache_size must be at least 1");

        std::size_t setup_at = sp + 1;
        if (line.compare(setup_at, 6, "setup=") != 0) fail(source, 1, "expected setup=");
        std::size_t sp2 = line.find(' ', setup_at);
        if (sp2 == std::string::npos) fail(source, 1, "header missing label field");
        auto setup = setup_from_string(line.substr(setup_at + 6, sp2 - setup_at - 6));
        if (!setup) fail(source, 1, "setup must be discard, phase or none");
        header.setup = *setup;

        if (line.compare(sp2 + 1, 6, "label=") != 0) fail(source, 1, "expected label=");
        header.label = line.substr(sp2 + 7);
    }

    std::vector<std::uint64_t> raw_requests;
    std::vector<Bit> predictions;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos) fail(source, lineno, "expected '<page-id> <bit>'");
        raw_requests.push_back(
            parse_u64(std::string_view(line).substr(0, sp), source, lineno, "page id"));
        const std::uint64_t bit =
            parse_u64(std::string_view(line).substr(sp + 1), source, lineno, "prediction bit");
        if (bit > 1) fail(source, lineno, "prediction bit must be 0 or 1");
        predictions.push_back(static_cast<Bit>(bit));
    }

    Trace trace = make_trace(header.cache_size, raw_requests, std::move(predictions),
                             header.setup, std::move(header.label));
    TraceValidation v = validate_trace(trace);
    if (!v.ok) fail(source, v.index + 2, v.message);
    return trace;
}

Trace read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TraceIoError(path + ": cannot open trace file");
    return read_trace(in, path);
}

void write_trace(const Trace& trace, std::ostream& out) {
    out << "k=" << trace.cache_size << " setup=" << to_string(trace.setup)
        << " label=" << trace.label << '\n';
    for (std::size_t i = 0; i < trace.size(); ++i)
        out << trace.page_names[trace.requests[i]] << ' ' << int(trace.predictions[i]) << '\n';
}

void write_trace_file(const Trace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw TraceIoError(path + ": cannot open for writing");
    write_trace(trace, out);
    if (!out) throw TraceIoError(path + ": write failed");
}

}  // namespace paging
