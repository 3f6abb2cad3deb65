#include "ranklab/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "ranklab/errors.hpp"

namespace ranklab {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Sequence parse_instance(std::istream& in) {
  Sequence out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    try {
      out.push_back(Scalar::parse(text));
    } catch (const ParseError& e) {
      throw InstanceError(lineno, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Sequence read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(0, "cannot open instance file '" + path.string() + "'");
  try {
    return parse_instance(in);
  } catch (const InstanceError& e) {
    throw InstanceError(e.line(), path.string() + ": " + e.what());
  }
}

void write_instance(std::ostream& out, std::span<const Scalar> values, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  for (const auto& v : values) out << v << '\n';
}

}  // namespace ranklab
