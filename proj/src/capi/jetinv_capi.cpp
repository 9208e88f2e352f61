#include "jetinv/jetinv.h"

#include "capi/commands.hpp"
#include "core/errors.hpp"

#include <new>
#include <string>

struct jetinv_params {
  jetinv::api::Params params;
};

struct jetinv_result {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

jetinv_status fail(jetinv_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

}  // namespace

extern "C" {

jetinv_params* jetinv_params_create(void) { return new (std::nothrow) jetinv_params(); }

void jetinv_params_destroy(jetinv_params* params) { delete params; }

jetinv_status jetinv_params_set(jetinv_params* params, const char* key, const char* value) {
  if (params == nullptr || key == nullptr || value == nullptr) return fail(JETINV_INVALID_INPUT, "null argument");
  try {
    params->params.set(key, value);
  } catch (const std::exception& e) {
    return fail(JETINV_INTERNAL, e.what());
  }
  return JETINV_OK;
}

jetinv_status jetinv_run(const char* command, const jetinv_params* params, jetinv_result** result) {
  if (result == nullptr) return fail(JETINV_INVALID_INPUT, "null result pointer");
  *result = nullptr;
  if (command == nullptr) return fail(JETINV_INVALID_INPUT, "null command");
  g_last_error.clear();
  try {
    static const jetinv::api::Params empty;
    const auto out = jetinv::api::run_command(command, params != nullptr ? params->params : empty);
    auto* r = new jetinv_result{out.json.dump(2), out.text};
    *result = r;
    return out.violated ? JETINV_VIOLATION : JETINV_OK;
  } catch (const jetinv::InvalidInput& e) {
    return fail(JETINV_INVALID_INPUT, e.what());
  } catch (const jetinv::ViolatedExpectation& e) {
    return fail(JETINV_VIOLATION, e.what());
  } catch (const jetinv::ResourceLimit& e) {
    return fail(JETINV_RESOURCE_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(JETINV_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(JETINV_INTERNAL, e.what());
  } catch (...) {
    return fail(JETINV_INTERNAL, "unknown error");
  }
}

const char* jetinv_result_json(const jetinv_result* result) { return result != nullptr ? result->json.c_str() : ""; }

const char* jetinv_result_text(const jetinv_result* result) { return result != nullptr ? result->text.c_str() : ""; }

void jetinv_result_destroy(jetinv_result* result) { delete result; }

const char* jetinv_last_error(void) { return g_last_error.c_str(); }

const char* jetinv_version(void) { return "0.1.0"; }

}  // extern "C"
