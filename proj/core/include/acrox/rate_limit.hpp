#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <mutex>

#include "acrox/clock.hpp"

namespace acrox {

// Sliding-window request limiter: at most `limit` permits in any trailing
// window. A permit granted at t stops counting at t + window.
class SlidingWindowLimiter {
 public:
  struct Decision {
    bool granted = false;
    Duration wait{};  // time until a permit can be granted; zero when granted
  };

  explicit SlidingWindowLimiter(std::size_t limit,
                                Duration window = std::chrono::seconds(60));

  // Grants a permit at `now` or reports the exact wait. Times earlier than
  // the latest one seen are treated as that latest time.
  Decision try_acquire(Instant now);

  std::size_t limit() const { return limit_; }
  Duration window() const { return window_; }

 private:
  std::size_t limit_;
  Duration window_;
  std::deque<Instant> granted_;
  Instant latest_{};
};

// Thread-safe gate combining a limiter with a clock to sleep on.
class RateGate {
 public:
  RateGate(std::size_t requests_per_minute, Clock& clock);

  // Blocks until a permit is granted; returns the grant time.
  Instant acquire();

  Clock& clock() { return clock_; }

 private:
  std::mutex mu_;
  SlidingWindowLimiter limiter_;
  Clock& clock_;
};

}  // namespace acrox
