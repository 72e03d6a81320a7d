#include "scpr/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "scpr/error.hpp"

namespace scpr {

namespace {

std::string real17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out(1);
  for (char c : line) {
    if (c == ',')
      out.emplace_back();
    else if (c != '\r')
      out.back() += c;
  }
  return out;
}

}  // namespace

std::string values_to_csv(const StateIndex& index,
                          const std::vector<double>& values) {
  if (values.size() != index.size())
    throw std::invalid_argument("value vector size does not match the states");
  const bool seq = index.variant() == Variant::Sequential;
  std::string out = seq ? "x1,x2,x3,u,value\n" : "x1,x2,x3,value\n";
  for (std::size_t s = 0; s < index.terminal(); ++s) {
    out += std::to_string(index.x1(s)) + "," + std::to_string(index.x2(s)) +
           "," + std::to_string(index.x3(s)) + ",";
    if (seq) out += std::to_string(index.u(s)) + ",";
    out += real17(values[s]) + "\n";
  }
  out += seq ? "TAU,,,," : "TAU,,,";
  out += real17(values[index.terminal()]) + "\n";
  return out;
}

std::vector<double> load_values_csv(std::string_view text,
                                    const StateIndex& index) {
  const bool seq = index.variant() == Variant::Sequential;
  const std::size_t fields = seq ? 5 : 4;
  std::vector<double> values(index.size());
  std::vector<char> seen(index.size(), 0);
  std::size_t line_no = 0;
  bool header = true;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto where = "line " + std::to_string(line_no);
    auto cells = split_commas(line);
    if (cells.size() != fields)
      throw ParseError(where + ": expected " + std::to_string(fields) +
                       " fields");
    if (header) {
      header = false;
      if (cells[0] == "x1") continue;
    }
    char* end = nullptr;
    double v = std::strtod(cells.back().c_str(), &end);
    if (cells.back().empty() || *end != '\0')
      throw ParseError(where + ": bad value '" + cells.back() + "'");
    std::size_t s;
    if (cells[0] == "TAU") {
      s = index.terminal();
    } else {
      int x[4] = {0, 0, 0, 0};
      for (std::size_t k = 0; k + 1 < fields; ++k) {
        try {
          std::size_t used = 0;
          x[k] = std::stoi(cells[k], &used);
          if (used != cells[k].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw ParseError(where + ": bad integer '" + cells[k] + "'");
        }
        const int hi = k == 3 ? 2 : index.n();
        if (x[k] < 1 || x[k] > hi)
          throw ParseError(where + ": field out of range");
      }
      s = seq ? index.index(SeqState{x[0], x[1], x[2], x[3], false})
              : index.index(ConcState{x[0], x[1], x[2], false});
    }
    if (seen[s]) throw ParseError(where + ": duplicate state");
    seen[s] = 1;
    values[s] = v;
  }
  for (std::size_t s = 0; s < index.size(); ++s)
    if (!seen[s]) throw ParseError("missing state " + index.describe(s));
  return values;
}

std::string capture_times_to_text(const CaptureTimeTable& table) {
  std::string out = "# cop robber time next\n";
  for (Vertex c = 1; c <= table.n; ++c)
    for (Vertex r = 1; r <= table.n; ++r) {
      int t = table.at(c, r);
      out += std::to_string(c) + " " + std::to_string(r) + " " +
             (t == CaptureTimeTable::kInfinity ? std::string("inf")
                                               : std::to_string(t)) +
             " " + std::to_string(table.move(c, r)) + "\n";
    }
  return out;
}

std::string policies_to_text(const CopPolicy& pi1, const CopPolicy& pi2) {
  return policy_to_text(pi1) + policy_to_text(pi2);
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!f) throw std::runtime_error("cannot write " + path);
}

}  // namespace scpr
