#include "acrox/clock.hpp"

#include <thread>

namespace acrox {

void SteadyClock::sleep_until(Instant deadline) { std::this_thread::sleep_until(deadline); }

Instant VirtualClock::now() const {
  std::lock_guard lock(mu_);
  return now_;
}

void VirtualClock::sleep_until(Instant deadline) {
  std::unique_lock lock(mu_);
  if (deadline <= now_) return;
  deadlines_.insert(deadline);
  ++sleeping_;
  maybe_advance_locked();
  cv_.wait(lock, [&] { return now_ >= deadline; });
}

void VirtualClock::add_participants(std::size_t n) {
  std::lock_guard lock(mu_);
  participants_ += n;
}

void VirtualClock::remove_participant() {
  std::lock_guard lock(mu_);
  if (participants_ > 0) --participants_;
  maybe_advance_locked();
}

void VirtualClock::advance(Duration d) {
  std::lock_guard lock(mu_);
  now_ += d;
  while (!deadlines_.empty() && *deadlines_.begin() <= now_) {
    deadlines_.erase(deadlines_.begin());
    --sleeping_;
  }
  cv_.notify_all();
}

void VirtualClock::maybe_advance_locked() {
  if (sleeping_ == 0 || sleeping_ < participants_ || deadlines_.empty()) return;
  if (*deadlines_.begin() > now_) now_ = *deadlines_.begin();
  // Sleepers whose deadline has passed count as awake from here on, so a
  // second advance cannot happen before they get to run.
  while (!deadlines_.empty() && *deadlines_.begin() <= now_) {
    deadlines_.erase(deadlines_.begin());
    --sleeping_;
  }
  cv_.notify_all();
}

}  // namespace acrox
