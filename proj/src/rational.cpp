#include "bkn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bkn {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

bool is_valid_rational_text(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == n) return true;
  if (text[i] != '/') return false;
  ++i;
  std::size_t den_start = i;
  std::size_t den_digits = 0;
  bool den_nonzero = false;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (text[i] != '0') den_nonzero = true;
    ++i;
    ++den_digits;
  }
  (void)den_start;
  return i == n && den_digits > 0 && den_nonzero;
}

Rat parse_rational(const std::string& text) {
  if (!is_valid_rational_text(text)) {
    throw std::invalid_argument("not a rational \"p\" or \"p/q\": '" + text + "'");
  }
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), body.c_str(), 10) != 0) {
    throw std::invalid_argument("unparsable rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace bkn
