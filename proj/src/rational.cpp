#include "cohfm/rational.hpp"

#include <cctype>

#include "cohfm/error.hpp"

namespace cohfm {

Rat rat(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

Rat rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r)) throw Error("expected an integer, got " + rat_str(r));
  const mpz_class& n = r.get_num();
  if (!n.fits_slong_p()) throw Error("integer out of range: " + rat_str(r));
  return n.get_si();
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_integer = [&](bool allow_sign) -> std::string {
    std::string out;
    if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) out.push_back(text[i++]);
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i++]);
      ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer", i + 1);
    return out;
  };

  skip_ws();
  std::string num = read_integer(true);
  skip_ws();
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_integer(false);
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after rational", i + 1);
  Rat r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) throw ParseError("zero denominator", 1);
  r.canonicalize();
  return r;
}

}  // namespace cohfm
