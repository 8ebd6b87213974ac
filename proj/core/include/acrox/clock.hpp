#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <mutex>
#include <set>

namespace acrox {

using Instant = std::chrono::steady_clock::time_point;
using Duration = std::chrono::steady_clock::duration;

class Clock {
 public:
  virtual ~Clock() = default;
  virtual Instant now() const = 0;
  virtual void sleep_until(Instant deadline) = 0;

  // Worker threads that share this clock announce themselves so a virtual
  // clock knows when every worker is blocked. No-ops for real clocks.
  virtual void add_participants(std::size_t /*n*/) {}
  virtual void remove_participant() {}
};

class SteadyClock final : public Clock {
 public:
  Instant now() const override { return std::chrono::steady_clock::now(); }
  void sleep_until(Instant deadline) override;
};

// Discrete-event clock. Time moves only when every registered participant
// is asleep, and then jumps to the earliest pending deadline. Callers that
// never registered (participants == 0) advance time as soon as they sleep.
class VirtualClock final : public Clock {
 public:
  explicit VirtualClock(Instant start = Instant{}) : now_(start) {}

  Instant now() const override;
  void sleep_until(Instant deadline) override;
  void add_participants(std::size_t n) override;
  void remove_participant() override;

  // Moves time forward by `d` regardless of sleepers.
  void advance(Duration d);

 private:
  void maybe_advance_locked();

  mutable std::mutex mu_;
  std::condition_variable cv_;
  Instant now_;
  std::size_t participants_ = 0;
  std::size_t sleeping_ = 0;
  std::multiset<Instant> deadlines_;
};

// Releases one add_participants() registration when the worker exits.
class ClockParticipant {
 public:
  explicit ClockParticipant(Clock& clock) : clock_(clock) {}
  ~ClockParticipant() { clock_.remove_participant(); }
  ClockParticipant(const ClockParticipant&) = delete;
  ClockParticipant& operator=(const ClockParticipant&) = delete;

 private:
  Clock& clock_;
};

}  // namespace acrox
