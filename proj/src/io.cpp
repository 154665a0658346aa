#include "semikit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace semikit::io {

  namespace {

    // Significant lines: neither blank nor comments.
    class LineReader {
     public:
      explicit LineReader(std::string_view text) : _text(text) {}

      bool next(std::string_view& line) {
        while (_pos < _text.size()) {
          std::size_t end = _text.find('\n', _pos);
          if (end == std::string_view::npos) {
            end = _text.size();
          }
          std::string_view raw = _text.substr(_pos, end - _pos);
          _pos                 = end + 1;
          ++_line_no;
          if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
          }
          auto first = raw.find_first_not_of(" \t");
          if (first == std::string_view::npos || raw[first] == '#') {
            continue;
          }
          line = raw;
          return true;
        }
        return false;
      }

      std::size_t line_no() const noexcept {
        return _line_no;
      }

     private:
      std::string_view _text;
      std::size_t      _pos     = 0;
      std::size_t      _line_no = 0;
    };

    [[noreturn]] void parse_fail(LineReader const& in, std::string const& what) {
      fail(ErrorKind::parse_error, "line " + std::to_string(in.line_no()) + ": " + what);
    }

    std::vector<std::size_t> integers(LineReader const& in, std::string_view line) {
      std::vector<std::size_t> out;
      std::size_t              pos = 0;
      while (true) {
        pos = line.find_first_not_of(" \t", pos);
        if (pos == std::string_view::npos) {
          break;
        }
        std::size_t end = line.find_first_of(" \t", pos);
        if (end == std::string_view::npos) {
          end = line.size();
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
        if (ec != std::errc() || ptr != line.data() + end) {
          parse_fail(in, "expected a nonnegative integer, got '"
                             + std::string(line.substr(pos, end - pos)) + "'");
        }
        out.push_back(value);
        pos = end;
      }
      return out;
    }

    std::string_view expect_line(LineReader& in, char const* what) {
      std::string_view line;
      if (!in.next(line)) {
        parse_fail(in, std::string("unexpected end of input, expected ") + what);
      }
      return line;
    }

    std::vector<Element> read_table_body(LineReader& in, std::size_t& n_out) {
      auto header = integers(in, expect_line(in, "the order"));
      if (header.size() != 1 || header[0] == 0) {
        parse_fail(in, "expected a single positive order");
      }
      std::size_t const n = header[0];
      if (n > default_max_order()) {
        fail(ErrorKind::overflow, "order " + std::to_string(n)
                                      + " exceeds the maximum order "
                                      + std::to_string(default_max_order()));
      }
      std::vector<Element> entries;
      entries.reserve(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        auto row = integers(in, expect_line(in, "a table row"));
        if (row.size() != n) {
          parse_fail(in, "row " + std::to_string(r) + " has " + std::to_string(row.size())
                             + " entries, expected " + std::to_string(n));
        }
        for (std::size_t v : row) {
          if (v >= n) {
            fail(ErrorKind::out_of_range,
                 "line " + std::to_string(in.line_no()) + ": entry " + std::to_string(v)
                     + " is not in [0, " + std::to_string(n) + ")",
                 {static_cast<Element>(r)});
          }
          entries.push_back(static_cast<Element>(v));
        }
      }
      n_out = n;
      return entries;
    }

    void format_table_body(std::ostream& out, FiniteSemigroup const& S) {
      out << S.order() << "\n";
      for (Element a = 0; a < S.order(); ++a) {
        auto row = S.row(a);
        for (std::size_t b = 0; b < row.size(); ++b) {
          out << (b == 0 ? "" : " ") << row[b];
        }
        out << "\n";
      }
    }

    std::size_t keyed_value(LineReader& in, std::string_view key) {
      auto line = expect_line(in, std::string(key).c_str());
      auto first = line.find_first_not_of(" \t");
      line.remove_prefix(first);
      if (line.substr(0, key.size()) != key) {
        parse_fail(in, "expected '" + std::string(key) + "'");
      }
      auto values = integers(in, line.substr(key.size()));
      if (values.size() != 1) {
        parse_fail(in, "expected one value after '" + std::string(key) + "'");
      }
      return values[0];
    }

    void expect_keyword(LineReader& in, std::string_view key) {
      auto line = expect_line(in, std::string(key).c_str());
      auto first = line.find_first_not_of(" \t");
      auto last  = line.find_last_not_of(" \t");
      if (line.substr(first, last - first + 1) != key) {
        parse_fail(in, "expected '" + std::string(key) + "'");
      }
    }

  }  // namespace

  FiniteSemigroup parse_sg(std::string_view text, std::string name) {
    LineReader  in(text);
    std::size_t n       = 0;
    auto        entries = read_table_body(in, n);
    std::string_view rest;
    if (in.next(rest)) {
      parse_fail(in, "trailing content after the table");
    }
    return FiniteSemigroup::from_table(n, std::move(entries), std::move(name));
  }

  std::string format_sg(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "# semikit semigroup";
    if (!S.name().empty()) {
      out << " " << S.name();
    }
    out << "\n";
    format_table_body(out, S);
    return out.str();
  }

  FiniteSemigroup read_sg(std::filesystem::path const& path) {
    return parse_sg(read_text(path), path.stem().string());
  }

  void write_sg(std::filesystem::path const& path, FiniteSemigroup const& S) {
    write_text(path, format_sg(S));
  }

  ReesMatrixSemigroup parse_rms(std::string_view text) {
    LineReader  in(text);
    std::size_t i_size      = keyed_value(in, "i_size");
    std::size_t lambda_size = keyed_value(in, "lambda_size");
    if (i_size == 0 || lambda_size == 0) {
      parse_fail(in, "index set sizes must be positive");
    }
    expect_keyword(in, "group");
    std::size_t g       = 0;
    auto        entries = read_table_body(in, g);
    auto        group   = FiniteSemigroup::from_table(g, std::move(entries));
    expect_keyword(in, "sandwich");
    std::vector<Element> sandwich;
    for (std::size_t l = 0; l < lambda_size; ++l) {
      auto row = integers(in, expect_line(in, "a sandwich row"));
      if (row.size() != i_size) {
        parse_fail(in, "sandwich row has " + std::to_string(row.size())
                           + " entries, expected " + std::to_string(i_size));
      }
      for (std::size_t v : row) {
        if (v >= g) {
          fail(ErrorKind::bad_sandwich_entry,
               "line " + std::to_string(in.line_no()) + ": " + std::to_string(v)
                   + " is not a group element");
        }
        sandwich.push_back(static_cast<Element>(v));
      }
    }
    std::string_view rest;
    if (in.next(rest)) {
      parse_fail(in, "trailing content after the sandwich matrix");
    }
    return rees_construct(i_size, lambda_size, group, sandwich);
  }

  std::string format_rms(ReesMatrixSemigroup const& rms) {
    std::ostringstream out;
    out << "# semikit rms\n";
    out << "i_size " << rms.i_size() << "\n";
    out << "lambda_size " << rms.lambda_size() << "\n";
    out << "group\n";
    format_table_body(out, rms.group());
    out << "sandwich\n";
    for (std::size_t l = 0; l < rms.lambda_size(); ++l) {
      for (std::size_t i = 0; i < rms.i_size(); ++i) {
        out << (i == 0 ? "" : " ") << rms.sandwich(l, i);
      }
      out << "\n";
    }
    return out.str();
  }

  ReesMatrixSemigroup read_rms(std::filesystem::path const& path) {
    return parse_rms(read_text(path));
  }

  void write_rms(std::filesystem::path const& path, ReesMatrixSemigroup const& rms) {
    write_text(path, format_rms(rms));
  }

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail(ErrorKind::io_error, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_text(std::filesystem::path const& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      fail(ErrorKind::io_error, "cannot write " + path.string());
    }
    out << text;
    if (!out) {
      fail(ErrorKind::io_error, "write failed for " + path.string());
    }
  }

}  // namespace semikit::io
