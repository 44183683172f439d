#pragma once
#include <cstdint>
#include <vector>

#include "migsim/machine.hpp"

namespace migsim {

enum class Layout { Local, Striped1D, Rows2D, Replicated };

const char* layout_name(Layout l);
Layout parse_layout(const std::string& s);  // throws on unknown name

// A layout-aware allocation. Resolution is pure: the same (allocation, index)
// always yields the same address.
//
//   Local       all words contiguous on one nodelet
//   Striped1D   word i lives on nodelet i mod N (round-robin)
//   Rows2D      row r lives wholly on nodelet r mod N, words contiguous
//   Replicated  one full copy per nodelet; resolution needs a home nodelet
class Allocation {
 public:
  Layout layout() const { return layout_; }
  std::uint64_t length_words() const { return length_; }

  // Flat-index resolution. Rows2D treats the index as row-major over the
  // concatenated rows. Throws std::out_of_range past the end and
  // std::invalid_argument if a Replicated allocation is resolved without a
  // home.
  GlobalAddress at(std::uint64_t index) const;
  GlobalAddress at(std::uint64_t index, std::uint32_t home) const;

  // Rows2D helpers.
  std::uint64_t row_count() const;
  std::uint64_t row_length(std::uint64_t row) const;
  GlobalAddress row_word(std::uint64_t row, std::uint64_t word) const;
  std::uint32_t row_nodelet(std::uint64_t row) const;

  std::uint32_t local_nodelet() const;  // Local only

 private:
  friend Allocation alloc_local(Machine&, std::uint32_t, std::uint64_t);
  friend Allocation alloc_1d_striped(Machine&, std::uint64_t);
  friend Allocation alloc_2d_rows(Machine&, const std::vector<std::uint64_t>&);
  friend Allocation alloc_replicated(Machine&, std::uint64_t);

  Layout layout_ = Layout::Local;
  std::uint64_t length_ = 0;
  std::uint32_t nodelets_ = 0;
  std::uint32_t local_nodelet_ = 0;
  std::vector<std::uint64_t> bases_;        // per nodelet (Striped1D, Replicated) or per row (Rows2D)
  std::vector<std::uint64_t> row_prefix_;   // Rows2D: prefix sums of row lengths
};

Allocation alloc_local(Machine& m, std::uint32_t nodelet_id, std::uint64_t n_words);
Allocation alloc_1d_striped(Machine& m, std::uint64_t n_words);
Allocation alloc_2d_rows(Machine& m, const std::vector<std::uint64_t>& row_lengths);
Allocation alloc_replicated(Machine& m, std::uint64_t n_words);

inline GlobalAddress resolve(const Allocation& a, std::uint64_t index) { return a.at(index); }
inline GlobalAddress resolve(const Allocation& a, std::uint64_t index, std::uint32_t home) {
  return a.at(index, home);
}

// Setup-phase write to every copy of a replicated allocation (untimed).
void broadcast_write(Machine& m, const Allocation& repl, std::uint64_t index, std::int64_t value);

}  // namespace migsim
