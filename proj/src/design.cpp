#include "qsd/design.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qsd {

DesignParams params_from(int v, int k, int lambda) {
  if (!(v > k && k >= 2 && lambda >= 1)) {
    throw Error(ErrorKind::InfeasibleParameters,
                "2-design parameters need v > k >= 2 and lambda >= 1");
  }
  const long long rn = static_cast<long long>(lambda) * (v - 1);
  if (rn % (k - 1) != 0) {
    throw Error(ErrorKind::InfeasibleParameters,
                "r = " + std::to_string(rn) + "/" + std::to_string(k - 1) + " is not an integer");
  }
  const long long r = rn / (k - 1);
  if ((static_cast<long long>(v) * r) % k != 0) {
    throw Error(ErrorKind::InfeasibleParameters, "b = " + std::to_string(v * r) + "/" +
                                                     std::to_string(k) + " is not an integer");
  }
  DesignParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.r = static_cast<int>(r);
  p.b = static_cast<int>(static_cast<long long>(v) * r / k);
  return p;
}

IncidenceStructure::IncidenceStructure(int v, std::vector<Block> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  if (v < 1) throw Error(ErrorKind::Precondition, "incidence structure needs at least one point");
  k_ = blocks_.empty() ? 0 : static_cast<int>(blocks_.front().size());
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) != k_) {
      throw Error(ErrorKind::Precondition, "blocks have differing sizes");
    }
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw Error(ErrorKind::Precondition, "block repeats a point");
    }
    if (!b.empty() && (b.front() < 1 || b.back() > v_)) {
      throw Error(ErrorKind::Precondition, "block point out of range 1.." + std::to_string(v_));
    }
  }
}

IncidenceStructure repeat_blocks(const IncidenceStructure& d, int copies) {
  std::vector<Block> blocks;
  for (int c = 0; c < copies; ++c) {
    blocks.insert(blocks.end(), d.blocks().begin(), d.blocks().end());
  }
  return IncidenceStructure(d.num_points(), std::move(blocks));
}

IncidenceStructure fano_plane() {
  return IncidenceStructure(
      7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

namespace {

int common_points(const Block& a, const Block& b) {
  int n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

bool is_2design(const IncidenceStructure& d, int lambda) {
  const int v = d.num_points();
  std::vector<int> pair_count(static_cast<std::size_t>(v * v), 0);
  for (const auto& b : d.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        ++pair_count[static_cast<std::size_t>((b[i] - 1) * v + (b[j] - 1))];
      }
    }
  }
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      if (pair_count[static_cast<std::size_t>(p * v + q)] != lambda) return false;
    }
  }
  return true;
}

std::set<int> intersection_numbers(const IncidenceStructure& d) {
  if (d.num_blocks() < 2) {
    throw Error(ErrorKind::DegenerateDesign, "intersection numbers need at least two blocks");
  }
  std::set<int> out;
  const auto& bs = d.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) out.insert(common_points(bs[i], bs[j]));
  }
  return out;
}

std::optional<std::pair<int, int>> is_quasi_symmetric(const IncidenceStructure& d) {
  if (d.num_blocks() < 2) return std::nullopt;
  const auto xs = intersection_numbers(d);
  if (xs.size() != 2) return std::nullopt;
  return std::make_pair(*xs.begin(), *xs.rbegin());
}

BitMatrix incidence_matrix(const IncidenceStructure& d) {
  BitMatrix a(d.num_points());
  for (const auto& b : d.blocks()) a.append(BitVector::from_support(d.num_points(), b));
  return a;
}

LinearCode bordered_code(const IncidenceStructure& d, int border) {
  if (border != 0 && border != 1 && border != 3) {
    throw Error(ErrorKind::Precondition,
                "border column count must be 0, 1 or 3, got " + std::to_string(border));
  }
  const int v = d.num_points();
  BitMatrix m(v + border);
  for (const auto& b : d.blocks()) {
    BitVector row = BitVector::from_support(v + border, b);
    for (int c = 1; c <= border; ++c) row.set(v + c);
    m.append(std::move(row));
  }
  return LinearCode(m);
}

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

IncidenceStructure parse_design(std::istream& in) {
  std::string line;
  int lineno = 0;
  int v = -1;
  int b = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> v >> b) || (hs >> extra)) parse_error(lineno, "malformed header, expected \"v b\"");
    break;
  }
  if (v < 0) parse_error(lineno, "missing \"v b\" header");
  if (v < 1 || b < 0) parse_error(lineno, "header values must satisfy v >= 1, b >= 0");

  std::vector<Block> blocks;
  std::size_t k = 0;
  while (static_cast<int>(blocks.size()) < b && std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    Block blk;
    std::string tok;
    while (ls >> tok) {
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        parse_error(lineno, "invalid point '" + tok + "'");
      }
      if (p < 1 || p > v) parse_error(lineno, "point " + tok + " outside 1.." + std::to_string(v));
      blk.push_back(p);
    }
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      parse_error(lineno, "block repeats a point");
    }
    if (blocks.empty()) {
      k = blk.size();
    } else if (blk.size() != k) {
      parse_error(lineno, "block has " + std::to_string(blk.size()) + " points, expected " +
                              std::to_string(k));
    }
    blocks.push_back(std::move(blk));
  }
  if (static_cast<int>(blocks.size()) < b) {
    parse_error(lineno, "expected " + std::to_string(b) + " blocks, found " +
                            std::to_string(blocks.size()));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank_or_comment(line)) parse_error(lineno, "unexpected content after last block");
  }
  return IncidenceStructure(v, std::move(blocks));
}

IncidenceStructure load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return parse_design(in);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    throw;
  }
}

std::string format_design(const IncidenceStructure& d) {
  std::string out = std::to_string(d.num_points()) + " " + std::to_string(d.num_blocks()) + "\n";
  for (const auto& b : d.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(b[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qsd
