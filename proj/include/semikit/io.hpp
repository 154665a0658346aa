#ifndef SEMIKIT_IO_HPP_
#define SEMIKIT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "core.hpp"
#include "simple.hpp"

namespace semikit::io {

  // .sg: '#' lines are comments, the first other line is n, then n rows of n
  // whitespace-separated indices. Blank lines are skipped.
  FiniteSemigroup parse_sg(std::string_view text, std::string name = {});

  // One '#' header line, then n, then the rows.
  std::string format_sg(FiniteSemigroup const& S);

  FiniteSemigroup read_sg(std::filesystem::path const& path);
  void            write_sg(std::filesystem::path const& path, FiniteSemigroup const& S);

  // .rms:
  //   # semikit rms
  //   i_size <|I|>
  //   lambda_size <|Lambda|>
  //   group
  //   <group table in the .sg layout, without its header>
  //   sandwich
  //   <|Lambda| rows of |I| group indices>
  ReesMatrixSemigroup parse_rms(std::string_view text);
  std::string         format_rms(ReesMatrixSemigroup const& rms);

  ReesMatrixSemigroup read_rms(std::filesystem::path const& path);
  void write_rms(std::filesystem::path const& path, ReesMatrixSemigroup const& rms);

  std::string read_text(std::filesystem::path const& path);
  void        write_text(std::filesystem::path const& path, std::string_view text);

}  // namespace semikit::io

#endif  // SEMIKIT_IO_HPP_
