#pragma once
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <queue>
#include <string>
#include <vector>

#include "migsim/machine.hpp"

namespace migsim {

class ThreadProgram;
struct ThreadContext;

using ProgramFactory = std::function<std::unique_ptr<ThreadProgram>()>;

// One abstract instruction. Every op consumes exactly one issue slot on the
// core except Compute, which consumes `cycles` slots.
struct AbstractOp {
  enum class Kind : std::uint8_t { Compute, Load, Store, RemoteAdd, Spawn, End };
  Kind kind = Kind::End;
  std::uint32_t cycles = 1;      // Compute only, >= 1
  GlobalAddress addr{};          // Load / Store / RemoteAdd
  std::int64_t value = 0;        // Store / RemoteAdd operand
  std::uint32_t spawn_target = 0;
  ProgramFactory spawn_child;    // Spawn only

  static AbstractOp compute(std::uint32_t c) {
    AbstractOp op;
    op.kind = Kind::Compute;
    op.cycles = c;
    return op;
  }
  static AbstractOp load(GlobalAddress a) {
    AbstractOp op;
    op.kind = Kind::Load;
    op.addr = a;
    return op;
  }
  static AbstractOp store(GlobalAddress a, std::int64_t v) {
    AbstractOp op;
    op.kind = Kind::Store;
    op.addr = a;
    op.value = v;
    return op;
  }
  static AbstractOp remote_add(GlobalAddress a, std::int64_t v) {
    AbstractOp op;
    op.kind = Kind::RemoteAdd;
    op.addr = a;
    op.value = v;
    return op;
  }
  static AbstractOp spawn(std::uint32_t target, ProgramFactory child) {
    AbstractOp op;
    op.kind = Kind::Spawn;
    op.spawn_target = target;
    op.spawn_child = std::move(child);
    return op;
  }
  static AbstractOp end() { return AbstractOp{}; }
};

enum class ThreadStatus : std::uint8_t { Ready, Blocked, Migrating, Done };

// Migratable thread state: home nodelet, status, a 16-entry register file and
// the program handle with its resume position. Migrating the context and
// resuming is behavior-preserving by construction.
struct ThreadContext {
  std::uint32_t id = 0;
  std::uint32_t nodelet = 0;
  std::int32_t core = -1;  // core index within nodelet, -1 when not resident
  ThreadStatus status = ThreadStatus::Ready;
  std::array<std::int64_t, 16> regs{};
  std::unique_ptr<ThreadProgram> program;
  AbstractOp op;               // current op, valid while op_pending
  bool op_pending = false;     // set when an op is in flight or awaiting re-issue
  std::uint32_t compute_left = 0;
};

// A thread's workload. next() is called once per op; a blocked Load is
// re-issued automatically after a migration, without another next() call.
class ThreadProgram {
 public:
  virtual ~ThreadProgram() = default;
  virtual AbstractOp next(ThreadContext& ctx) = 0;
  // Result of the most recent Load, delivered before the thread resumes.
  virtual void on_load(ThreadContext& ctx, std::int64_t value) { (void)ctx, (void)value; }
};

// All counters a run produces. Bandwidth is decimal MB/s throughout.
struct SimStats {
  std::uint64_t sim_cycles = 0;
  std::uint64_t thread_count = 0;
  bool timed_out = false;

  std::vector<std::uint64_t> loads;
  std::vector<std::uint64_t> stores;
  std::vector<std::uint64_t> remote_writes;
  std::vector<std::uint64_t> migrations_in;
  std::vector<std::uint64_t> migrations_out;
  std::vector<std::uint64_t> spawns;
  std::vector<std::uint64_t> channel_busy_cycles;
  std::vector<std::uint64_t> core_busy_cycles;
  std::vector<std::uint64_t> engine_busy_cycles;

  std::uint64_t total_loads() const;
  std::uint64_t total_stores() const;
  std::uint64_t total_remote_writes() const;
  std::uint64_t total_migrations() const;  // sum of migrations_in
  std::uint64_t total_spawns() const;
  std::uint64_t bytes_moved(std::uint32_t word_bytes) const;
  double seconds(std::uint64_t freq_hz) const;
  double achieved_bw_bytes_per_sec(std::uint32_t word_bytes, std::uint64_t freq_hz) const;
  double achieved_bw_mbps(std::uint32_t word_bytes, std::uint64_t freq_hz) const;

  std::string to_json_string(const MachineConfig& cfg) const;

  bool operator==(const SimStats&) const = default;
};

// Discrete-event core: per nodelet one FIFO memory channel, one bidirectional
// migration engine and cores_per_nodelet multithreaded cores that issue one
// abstract instruction per cycle, round-robin over their ready threads.
//
//   Load  local   channel occupancy, thread blocks until data returns
//   Load  remote  context leaves through the source engine, arrives through
//                 the destination engine after the tier latency, then the
//                 load re-issues locally
//   Store local   channel occupancy, thread continues next cycle
//   Store remote / RemoteAdd   fire-and-forget write at the target channel
//   Spawn local   child created on the spawner's nodelet
//   Spawn remote  context-sized message through both migration engines
//
// A core holds at most max_threads_per_core resident threads; excess threads
// queue at the nodelet until a slot frees. Identical (config, seed, programs)
// give byte-identical stats.
class Engine {
 public:
  explicit Engine(Machine& machine);

  // Spec-level spawn: remote=true creates the context at target_nodelet and
  // charges one spawn-message transfer; remote=false creates it at origin.
  std::uint32_t spawn_thread(std::unique_ptr<ThreadProgram> program, std::uint32_t target_nodelet,
                             bool remote, std::uint32_t origin_nodelet = 0);

  // Runs until every thread is Done or the deadline is hit (timed_out set).
  // May be called again after injecting more threads; the clock continues.
  SimStats run_until_idle(std::uint64_t deadline_cycles = kDefaultDeadline);

  std::uint64_t now() const { return now_; }
  const SimStats& stats() const { return stats_; }
  Machine& machine() { return mach_; }

  static constexpr std::uint64_t kDefaultDeadline = 40'000'000'000ULL;

 private:
  struct Core {
    std::deque<std::uint32_t> ready;
    std::uint32_t resident = 0;
  };
  struct Nodelet {
    std::uint64_t channel_busy_until = 0;
    std::uint64_t engine_busy_until = 0;
    std::deque<std::uint32_t> admission;  // threads waiting for a core slot
  };
  struct Event {
    enum class Kind : std::uint8_t { Wake, MigArrive, SpawnArrive, RemoteWrite, Admit };
    std::uint64_t at = 0;
    std::uint64_t seq = 0;
    Kind kind = Kind::Wake;
    std::uint32_t tid = 0;
    std::uint32_t nodelet = 0;
    GlobalAddress addr{};
    std::int64_t value = 0;
    bool is_add = false;
  };
  struct EventLater {
    bool operator()(const Event& a, const Event& b) const {
      return a.at != b.at ? a.at > b.at : a.seq > b.seq;
    }
  };

  void schedule(Event ev);
  void process_events();
  void issue(std::uint32_t nodelet_id, std::uint32_t core_idx);
  void try_admit(std::uint32_t nodelet_id);
  std::uint32_t create_thread(std::unique_ptr<ThreadProgram> program, std::uint32_t nodelet_id);
  void start_migration(ThreadContext& t, std::uint32_t dest);
  void release_slot(ThreadContext& t);
  std::uint64_t link_latency(std::uint32_t from, std::uint32_t to) const;
  std::uint64_t channel_service(std::uint32_t nodelet_id);  // returns completion cycle
  Core& core_at(std::uint32_t nodelet_id, std::uint32_t core_idx);

  Machine& mach_;
  MachineConfig cfg_;
  std::uint64_t chan_occ_;
  std::uint64_t mig_occ_;
  std::uint64_t now_ = 0;
  std::uint64_t seq_ = 0;
  std::uint32_t live_ = 0;
  std::vector<Core> cores_;
  std::vector<Nodelet> nodelets_;
  std::priority_queue<Event, std::vector<Event>, EventLater> events_;
  std::deque<ThreadContext> threads_;
  std::vector<ProgramFactory> pending_spawns_;
  SimStats stats_;
};

}  // namespace migsim
