#include "cli_parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace sjt::cli {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    if (ch == ')' || ch == ']' || ch == '}') {
      if (--depth < 0) throw ParseError("unbalanced brackets in '" + s + "'");
    }
    if (ch == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + s + "'");
  parts.push_back(trim(cur));
  return parts;
}

Config parse_config(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineNo) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) {
          return std::isalnum(c) || c == '_' || c == '-';
        }))
      throw ParseError("line " + std::to_string(lineNo) + ": bad key '" + key + "'");
    if (value.empty()) throw ParseError("line " + std::to_string(lineNo) + ": empty value for '" + key + "'");
    if (cfg.count(key)) throw ParseError("line " + std::to_string(lineNo) + ": duplicate key '" + key + "'");
    cfg[key] = {value, lineNo};
  }
  return cfg;
}

namespace {

double parse_real(const std::string& s, const std::string& context) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (!s.empty() && *b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw ParseError("bad number '" + s + "' in '" + context + "'");
  return v;
}

}  // namespace

cplx parse_complex(const std::string& token) {
  std::string t;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty number");
  if (t.back() != 'i') return parse_real(t, token);
  // imaginary part: find the sign that starts it (not part of an exponent)
  std::size_t split = 0;
  for (std::size_t k = t.size() - 1; k-- > 0;) {
    if ((t[k] == '+' || t[k] == '-') && k > 0 && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = t.substr(0, split);
  std::string im = t.substr(split, t.size() - split - 1);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, token), parse_real(im, token)};
}

CMatrix parse_matrix(const std::string& literal) {
  std::string s = trim(literal);
  if (s.empty()) throw ParseError("empty matrix literal");
  if (s.front() != '[') return CMatrix{{parse_complex(s)}};
  if (s.back() != ']') throw ParseError("matrix literal must end with ']': '" + literal + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<cplx>> rows;
  for (const auto& row : split_top_level(s, ';')) {
    std::vector<cplx> r;
    for (const auto& cell : split_top_level(row, ',')) r.push_back(parse_complex(cell));
    if (!rows.empty() && r.size() != rows.front().size())
      throw ParseError("ragged matrix literal '" + literal + "'");
    rows.push_back(std::move(r));
  }
  CMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RMatrix parse_real_matrix(const std::string& literal) {
  const CMatrix c = parse_matrix(literal);
  for (const auto& v : c.data())
    if (v.imag() != 0.0) throw ParseError("expected a real matrix: '" + literal + "'");
  return real_part(c);
}

IndexMatrix parse_index(const std::string& literal) {
  if (trim(literal) == "E8") return IndexMatrix::E8();
  const RMatrix m = parse_real_matrix(literal);
  if (!m.square()) throw ParseError("index matrix must be square: '" + literal + "'");
  return IndexMatrix(RealSymMatrix(m));
}

namespace {

std::string call_args(const std::string& letter, const std::string& name) {
  if (letter.size() < name.size() + 2 || letter.compare(0, name.size() + 1, name + "(") != 0 ||
      letter.back() != ')')
    throw ParseError("bad generator '" + letter + "'");
  return letter.substr(name.size() + 1, letter.size() - name.size() - 2);
}

}  // namespace

Word parse_word(const std::string& text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("word must end with ']'");
    s = s.substr(1, s.size() - 2);
  }
  Word w;
  if (trim(s).empty()) return w;
  for (const auto& letter : split_top_level(s, ',')) {
    if (letter == "sigma") {
      w.push_back(Generator::sigma());
    } else if (letter.rfind("t(", 0) == 0) {
      w.push_back(Generator::trans(RealSymMatrix(parse_real_matrix(call_args(letter, "t")))));
    } else if (letter.rfind("g(", 0) == 0) {
      w.push_back(Generator::scale(parse_real_matrix(call_args(letter, "g"))));
    } else if (letter.rfind("h(", 0) == 0) {
      const auto parts = split_top_level(call_args(letter, "h"), ';');
      if (parts.size() != 3) throw ParseError("h(...) takes lambda; mu; kappa: '" + letter + "'");
      w.push_back(Generator::heis(HeisenbergElement(parse_real_matrix(parts[0]), parse_real_matrix(parts[1]),
                                                    parse_real_matrix(parts[2]))));
    } else {
      throw ParseError("unknown generator '" + letter + "'");
    }
  }
  return w;
}

}  // namespace sjt::cli
