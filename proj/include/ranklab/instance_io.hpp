#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "ranklab/ranksum.hpp"

namespace ranklab {

/// Unreadable instance file, or a line that is not a scalar. `line()` is
/// 1-based, 0 when the file itself could not be opened.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(std::size_t line, const std::string& what) : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One scalar per line. Surrounding whitespace is trimmed; blank lines and
/// lines starting with '#' are skipped.
Sequence parse_instance(std::istream& in);
Sequence read_instance_file(const std::filesystem::path& path);

/// Writes optional `# `-prefixed comment lines, then one scalar per line.
void write_instance(std::ostream& out, std::span<const Scalar> values, const std::string& comment = {});

}  // namespace ranklab
