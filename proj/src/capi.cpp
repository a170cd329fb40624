#include "gradecheck/gradecheck.h"

#include "session.hpp"

struct gc_session {
  gradecheck::Session impl;
  std::string out;
  std::string err;
  std::string warn;
};

namespace {

template <typename F>
int guarded(gc_session* s, F&& body) {
  if (!s) return GC_ERROR;
  s->err.clear();
  try {
    body();
    return GC_OK;
  } catch (const gradecheck::ParseError& e) {
    s->err = e.what();
    return GC_PRECONDITION;
  } catch (const gradecheck::PreconditionError& e) {
    s->err = e.what();
    return GC_PRECONDITION;
  } catch (const std::exception& e) {
    s->err = e.what();
    return GC_ERROR;
  }
}

}  // namespace

extern "C" {

gc_session* gc_session_new(void) { return new (std::nothrow) gc_session(); }

void gc_session_free(gc_session* s) { delete s; }

int gc_session_set_seed(gc_session* s, uint64_t seed) {
  return guarded(s, [&] { s->impl.set_seed(seed); });
}

int gc_session_set_option(gc_session* s, const char* key, long long value) {
  return guarded(s, [&] {
    if (!key) throw gradecheck::PreconditionError("null option key");
    s->impl.set_option(key, value);
  });
}

int gc_session_parse(gc_session* s, const char* text) {
  return guarded(s, [&] {
    if (!text) throw gradecheck::PreconditionError("null input text");
    s->impl.parse(text);
    s->warn = s->impl.warnings_text();
  });
}

int gc_run_report(gc_session* s, int as_json, const char** out) {
  int precondition = 0;
  int status = guarded(s, [&] {
    int st = 0;
    s->out = s->impl.run_report(as_json != 0, &st);
    precondition = st;
    if (out) *out = s->out.c_str();
  });
  if (status != GC_OK) return status;
  if (precondition != 0) {
    s->err = "a precondition failed; see the report body";
    return GC_PRECONDITION;
  }
  return GC_OK;
}

int gc_run_check(gc_session* s, const char* command, const char* argument,
                 const char** out) {
  return guarded(s, [&] {
    if (!command) throw gradecheck::PreconditionError("null command");
    s->out = s->impl.run_check(command, argument ? argument : "", true);
    if (out) *out = s->out.c_str();
  });
}

const char* gc_session_warnings(gc_session* s) { return s ? s->warn.c_str() : ""; }

const char* gc_session_error(gc_session* s) { return s ? s->err.c_str() : ""; }

const char* gc_version(void) { return "1.0.0"; }

}  // extern "C"
