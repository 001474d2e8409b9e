#include <fstream>
#include <set>
#include <sstream>

#include "covbound/code.hpp"
#include "covbound/errors.hpp"

namespace covbound {

namespace {

constexpr int kMaxFileQ = 36;  // digits 0-9a-z

char digit_char(Fel v) {
  return v < 10 ? char('0' + v) : char('a' + (v - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

std::string header_line(int q, int n, bool linear) {
  std::ostringstream os;
  os << "q=" << q << " n=" << n << " kind=" << (linear ? "linear" : "explicit");
  return os.str();
}

std::string row_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Fel v : w) s.push_back(digit_char(v));
  return s;
}

int parse_int_field(const std::string& token, const std::string& key) {
  if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
      token[key.size()] != '=')
    fail(Errc::parse_error, "code file header: expected " + key + "=<value>");
  try {
    size_t used = 0;
    int v = std::stoi(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail(Errc::parse_error, "code file header: bad integer in " + token);
  }
}

}  // namespace

LoadedCode parse_code(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int q = 0, n = 0;
  bool linear = false;
  std::vector<Word> rows;
  std::set<Word> seen;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      fail(Errc::parse_error, "code files use LF line endings (line " +
                                  std::to_string(lineno) + ")");
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tq, tn, tk;
      if (!(hs >> tq >> tn >> tk))
        fail(Errc::parse_error, "code file header: expected 'q=.. n=.. kind=..'");
      std::string extra;
      if (hs >> extra)
        fail(Errc::parse_error, "code file header: trailing tokens");
      q = parse_int_field(tq, "q");
      n = parse_int_field(tn, "n");
      if (tk == "kind=linear")
        linear = true;
      else if (tk == "kind=explicit")
        linear = false;
      else
        fail(Errc::parse_error, "code file header: kind must be linear or explicit");
      if (q < 2 || q > kMaxFileQ)
        fail(Errc::parse_error, "code files support 2 <= q <= " +
                                    std::to_string(kMaxFileQ));
      if (n < 1) fail(Errc::parse_error, "code file header: n must be positive");
      have_header = true;
      continue;
    }
    if (int(line.size()) != n)
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(n) + " digits, got " +
                                  std::to_string(line.size()));
    Word w(n);
    for (int j = 0; j < n; ++j) {
      int v = digit_value(line[j]);
      if (v < 0 || v >= q)
        fail(Errc::parse_error, "line " + std::to_string(lineno) +
                                    ": digit '" + line[j] +
                                    "' out of range for q=" + std::to_string(q));
      w[j] = Fel(v);
    }
    if (!linear && !seen.insert(w).second)
      fail(Errc::parse_error,
           "line " + std::to_string(lineno) + ": duplicate codeword");
    rows.push_back(std::move(w));
  }

  if (!have_header) fail(Errc::parse_error, "code file has no header line");
  if (rows.empty()) fail(Errc::parse_error, "code file has no rows");

  FieldPtr f = field_make(q);
  LoadedCode out;
  if (linear) {
    Matrix g(f, int(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < n; ++c) g.at(int(r), c) = rows[r][c];
    try {
      out.linear.emplace(std::move(g));
    } catch (const ToolError& e) {
      fail(Errc::parse_error, std::string("code file generator: ") + e.what());
    }
  } else {
    Code c;
    c.f = f;
    c.n = n;
    c.words = std::move(rows);
    out.words = std::move(c);
  }
  return out;
}

LoadedCode read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

std::string format_code(const LinearCode& c) {
  if (c.q() > kMaxFileQ)
    fail(Errc::bad_params, "code files support q <= " + std::to_string(kMaxFileQ));
  std::string s = header_line(c.q(), c.n(), true) + "\n";
  for (int r = 0; r < c.k(); ++r) {
    Word row(c.n());
    for (int j = 0; j < c.n(); ++j) row[j] = c.generator().at(r, j);
    s += row_string(row) + "\n";
  }
  return s;
}

std::string format_code(const Code& c) {
  if (c.f->q() > kMaxFileQ)
    fail(Errc::bad_params, "code files support q <= " + std::to_string(kMaxFileQ));
  std::string s = header_line(c.f->q(), c.n, false) + "\n";
  for (const Word& w : c.words) s += row_string(w) + "\n";
  return s;
}

void write_code_file(const std::string& path, const std::string& formatted) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << formatted;
  if (!out) fail(Errc::io_error, "write failed: " + path);
}

}  // namespace covbound
