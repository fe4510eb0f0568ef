#include "boostdms/external_evaluator.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <iostream>
#include <limits>
#include <mutex>
#include <vector>

#include "boostdms/front_io.hpp"
#include "json.hpp"

namespace boostdms {

namespace {

constexpr int kMaxConsecutiveCrashes = 3;

class Child {
 public:
  explicit Child(const std::string& command) {
    int in[2];
    int out[2];
    if (::pipe2(in, O_CLOEXEC) != 0) throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
    if (::pipe2(out, O_CLOEXEC) != 0) {
      ::close(in[0]);
      ::close(in[1]);
      throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
    }
    pid_ = ::fork();
    if (pid_ < 0) throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
    if (pid_ == 0) {
      ::dup2(in[0], STDIN_FILENO);
      ::dup2(out[1], STDOUT_FILENO);
      ::close(in[0]);
      ::close(in[1]);
      ::close(out[0]);
      ::close(out[1]);
      ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::close(in[0]);
    ::close(out[1]);
    to_child_ = in[1];
    from_child_ = out[0];
  }

  ~Child() {
    ::close(to_child_);
    ::close(from_child_);
    int status = 0;
    if (::waitpid(pid_, &status, WNOHANG) == 0) {
      ::kill(pid_, SIGKILL);
      ::waitpid(pid_, &status, 0);
    }
  }

  Child(const Child&) = delete;
  Child& operator=(const Child&) = delete;

  // Sends one request and returns the response line, or nullopt on EOF / write error.
  std::optional<std::string> exchange(const std::string& request) {
    std::string line = request + '\n';
    std::size_t sent = 0;
    while (sent < line.size()) {
      const ssize_t w = ::write(to_child_, line.data() + sent, line.size() - sent);
      if (w < 0 && errno == EINTR) continue;
      if (w <= 0) return std::nullopt;
      sent += static_cast<std::size_t>(w);
    }
    for (;;) {
      const auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string out = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return out;
      }
      char chunk[4096];
      const ssize_t r = ::read(from_child_, chunk, sizeof chunk);
      if (r < 0 && errno == EINTR) continue;
      if (r <= 0) return std::nullopt;
      buffer_.append(chunk, static_cast<std::size_t>(r));
    }
  }

 private:
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

class Pool {
 public:
  Pool(std::string command, int q) : command_(std::move(command)), q_(q) {
    // A dead child must surface as a write error, not kill the host.
    ::signal(SIGPIPE, SIG_IGN);
  }

  ObjVector evaluate(const Vec& x) {
    std::unique_ptr<Child> child = checkout();
    std::optional<ObjVector> f;
    if (auto line = child->exchange(format_request(x))) f = parse_response(*line, q_);
    if (f) {
      crashes_.store(0);
      checkin(std::move(child));
      return *f;
    }
    child.reset();
    const int streak = crashes_.fetch_add(1) + 1;
    std::cerr << "external evaluator '" << command_ << "' failed (" << streak << " in a row)\n";
    if (streak >= kMaxConsecutiveCrashes) {
      throw ExternalEvaluatorFailed("external evaluator failed " + std::to_string(streak) + " times in a row");
    }
    return ObjVector::Constant(q_, std::numeric_limits<double>::infinity());
  }

 private:
  std::unique_ptr<Child> checkout() {
    {
      std::lock_guard lock(mutex_);
      if (!idle_.empty()) {
        auto c = std::move(idle_.back());
        idle_.pop_back();
        return c;
      }
    }
    return std::make_unique<Child>(command_);
  }

  void checkin(std::unique_ptr<Child> child) {
    std::lock_guard lock(mutex_);
    idle_.push_back(std::move(child));
  }

  std::string command_;
  int q_;
  std::atomic<int> crashes_{0};
  std::mutex mutex_;
  std::vector<std::unique_ptr<Child>> idle_;
};

}  // namespace

std::optional<ObjVector> parse_response(std::string_view line, int q) {
  const auto doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("f")) return std::nullopt;
  const auto& f = doc["f"];
  if (!f.is_array() || f.size() != static_cast<std::size_t>(q)) return std::nullopt;
  ObjVector out(q);
  for (int i = 0; i < q; ++i) {
    const auto& v = f[static_cast<std::size_t>(i)];
    if (v.is_number()) {
      out[i] = v.get<double>();
    } else if (v.is_string() && v.get<std::string>() == "inf") {
      out[i] = std::numeric_limits<double>::infinity();
    } else if (v.is_string() && v.get<std::string>() == "-inf") {
      out[i] = -std::numeric_limits<double>::infinity();
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::string format_request(const Vec& x) {
  std::string s = "{\"x\":[";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += format_double(x[i]);
  }
  s += "]}";
  return s;
}

Problem make_external_problem(const ExternalSpec& spec) {
  if (spec.command.empty()) throw std::invalid_argument("external evaluator: empty command");
  auto pool = std::make_shared<Pool>(spec.command, spec.q);
  return Problem(spec.name, spec.lb, spec.ub, spec.q, [pool](const Vec& x) { return pool->evaluate(x); });
}

}  // namespace boostdms
