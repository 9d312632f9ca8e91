#include "genscale/scale.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "genscale/errors.hpp"

namespace genscale {

namespace {

// Parses a full run of digits into a long long; rejects anything else.
long long parse_uint(const std::string& text, const char* what) {
  if (text.empty()) throw ParseError(std::string("scale: missing ") + what);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string("scale: malformed ") + what + " '" + text + "'");
  }
  return value;
}

std::string trimmed(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

bool Scale::contains(int pc) const {
  return std::binary_search(pcs.begin(), pcs.end(), pc);
}

bool AffineMap::bijective() const { return std::gcd(static_cast<long long>(mult), static_cast<long long>(c)) == 1; }

int mod_reduce(long long x, int c) {
  if (c < 1) throw PreconditionError("mod_reduce: modulus must be >= 1");
  long long r = x % c;
  if (r < 0) r += c;
  return static_cast<int>(r);
}

Scale make_scale(int c, std::vector<int> values) {
  if (c < 1) throw PreconditionError("scale: modulus must be >= 1");
  for (int& v : values) v = mod_reduce(v, c);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Scale{c, std::move(values)};
}

Scale full_aggregate(int c) {
  if (c < 1) throw PreconditionError("scale: modulus must be >= 1");
  std::vector<int> all(c);
  std::iota(all.begin(), all.end(), 0);
  return Scale{c, std::move(all)};
}

Scale translate(const Scale& s, int t) {
  std::vector<int> moved;
  moved.reserve(s.pcs.size());
  for (int x : s.pcs) moved.push_back(mod_reduce(static_cast<long long>(x) + t, s.c));
  return make_scale(s.c, std::move(moved));
}

Scale apply_affine(const Scale& s, const AffineMap& m) {
  if (m.c != s.c) throw PreconditionError("apply_affine: modulus mismatch");
  std::vector<int> image;
  image.reserve(s.pcs.size());
  for (int x : s.pcs) {
    image.push_back(mod_reduce(static_cast<long long>(m.mult) * x + m.offset, s.c));
  }
  return make_scale(s.c, std::move(image));
}

Scale complement(const Scale& s) {
  std::vector<int> rest;
  rest.reserve(s.c - s.size());
  size_t i = 0;
  for (int x = 0; x < s.c; ++x) {
    if (i < s.pcs.size() && s.pcs[i] == x) {
      ++i;
    } else {
      rest.push_back(x);
    }
  }
  return Scale{s.c, std::move(rest)};
}

Scale parse_scale(const std::string& raw) {
  const std::string text = trimmed(raw);
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("scale: expected \"c:p1,p2,...\", got '" + raw + "'");
  }
  long long c = parse_uint(text.substr(0, colon), "modulus");
  if (c < 1) throw ParseError("scale: modulus must be >= 1");
  if (c > std::numeric_limits<int>::max()) throw ParseError("scale: modulus too large");

  std::vector<int> pcs;
  std::string body = text.substr(colon + 1);
  if (!body.empty()) {
    std::stringstream stream(body);
    std::string item;
    while (std::getline(stream, item, ',')) {
      long long pc = parse_uint(item, "residue");
      if (pc >= c) {
        throw ParseError("scale: residue " + std::to_string(pc) +
                         " out of range for modulus " + std::to_string(c));
      }
      pcs.push_back(static_cast<int>(pc));
    }
    if (body.back() == ',') throw ParseError("scale: trailing comma");
  }
  std::sort(pcs.begin(), pcs.end());
  if (std::adjacent_find(pcs.begin(), pcs.end()) != pcs.end()) {
    throw ParseError("scale: duplicate residue");
  }
  return Scale{static_cast<int>(c), std::move(pcs)};
}

std::string format_scale(const Scale& s) {
  std::string out = std::to_string(s.c) + ":";
  for (size_t i = 0; i < s.pcs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.pcs[i]);
  }
  return out;
}

}  // namespace genscale
