#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace migsim {

// Topology and rate parameters of the simulated machine. Defaults mirror the
// prototype: 8 nodes x 8 nodelets, one 175 MHz core per nodelet, 64 thread
// slots per core, 8-byte words over a 1.6 GB/s narrow memory channel, and a
// ~200-byte migratable thread context.
struct MachineConfig {
  std::uint32_t nodes = 8;
  std::uint32_t nodelets_per_node = 8;
  std::uint32_t cores_per_nodelet = 1;
  std::uint32_t max_threads_per_core = 64;
  std::uint64_t core_freq_hz = 175'000'000;
  std::uint64_t channel_bw_bytes_per_sec = 1'600'000'000;  // per nodelet channel
  std::uint32_t channel_latency_cycles = 100;              // request issue -> data back
  std::uint32_t word_bytes = 8;
  std::uint32_t context_bytes = 200;
  std::uint32_t intra_node_migration_latency_cycles = 50;   // placeholder, not a measured value
  std::uint32_t inter_node_migration_latency_cycles = 200;  // placeholder, not a measured value
  std::uint64_t network_bw_bytes_per_sec = 1'600'000'000;   // per nodelet migration port
  std::uint64_t seed = 12345;

  std::uint32_t total_nodelets() const { return nodes * nodelets_per_node; }
  std::uint32_t total_cores() const { return total_nodelets() * cores_per_nodelet; }

  // Channel service slots per word and migration-engine slots per context
  // transfer, both rounded up to at least one cycle.
  std::uint64_t channel_occupancy_cycles() const;
  std::uint64_t migration_occupancy_cycles() const;

  // Throws std::invalid_argument on zero counts/rates.
  void validate() const;

  bool operator==(const MachineConfig&) const = default;

  // Canonical "key = value" listing, one parameter per line.
  std::string to_kv_text() const;
  // Applies one "key = value" (or "key value") line; unknown key throws.
  void apply_kv(const std::string& key, const std::string& value);
  // Stable hash of all parameters, used to tag result rows.
  std::uint64_t hash() const;
};

MachineConfig load_machine_config(const std::string& path);

// A word address in the partitioned global address space.
struct GlobalAddress {
  std::uint32_t nodelet = 0;
  std::uint64_t offset_words = 0;
  bool operator==(const GlobalAddress&) const = default;
};

inline std::uint32_t nodelet_of(const GlobalAddress& a) { return a.nodelet; }

// Simulated machine: immutable topology plus per-nodelet memory bookkeeping
// and word-granular backing storage for benchmark arrays.
class Machine {
 public:
  explicit Machine(MachineConfig cfg);

  const MachineConfig& config() const { return cfg_; }
  std::uint32_t total_nodelets() const { return cfg_.total_nodelets(); }

  std::uint32_t node_of(std::uint32_t nodelet_id) const;  // floor(id / nodelets_per_node)

  // Reserves n_words on a nodelet and returns the base word offset.
  // Capacity is unbounded unless set_capacity_words() was called.
  std::uint64_t allocate_words(std::uint32_t nodelet_id, std::uint64_t n_words);
  void set_capacity_words(std::uint64_t words_per_nodelet) { capacity_words_ = words_per_nodelet; }
  std::uint64_t used_words(std::uint32_t nodelet_id) const;

  std::int64_t read(const GlobalAddress& a) const;
  void write(const GlobalAddress& a, std::int64_t value);

  bool operator==(const Machine& other) const;

 private:
  MachineConfig cfg_;
  std::vector<std::vector<std::int64_t>> mem_;  // backing store, grown by allocate_words
  std::uint64_t capacity_words_ = 0;            // 0 = unbounded
};

Machine build_machine(const MachineConfig& cfg);

}  // namespace migsim
