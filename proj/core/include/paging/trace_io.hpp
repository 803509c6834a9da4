#ifndef PAGING_TRACE_IO_HPP
#define PAGING_TRACE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "paging/model.hpp"

namespace paging {

/// Malformed trace file; message carries "<source>:<line>: <problem>".
class TraceIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Line-oriented text format:
///   k=<int> setup=<discard|phase|none> label=<string>
///   <page-id> <bit>        (one line per request)
Trace read_trace(std::istream& in, const std::string& source = "<stream>");
Trace read_trace_file(const std::string& path);

void write_trace(const Trace& trace, std::ostream& out);
void write_trace_file(const Trace& trace, const std::string& path);

}  // namespace paging

#endif
