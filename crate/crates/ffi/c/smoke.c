/* Build: cc -I include c/smoke.c ../../target/debug/libordalab_ffi.a -lpthread -ldl -lm */
#include <stdio.h>

#include "ordalab.h"

int main(void) {
  OrdalabReport *report = NULL;
  OrdalabStatus st = ordalab_check("{\"structure\": \"Q\", \"suite\": \"density\"}", &report);
  if (st != ORDALAB_STATUS_OK) {
    fprintf(stderr, "check failed: %s\n", ordalab_last_error());
    return 1;
  }
  printf("ordalab %s: %zu records, exit %d\n", ordalab_version(), ordalab_report_len(report),
         ordalab_report_exit_code(report));
  ordalab_report_free(report);

  OrdalabRational *r = NULL;
  bool zero = false;
  int64_t exp = 0;
  if (ordalab_rational_parse("9/8", &r) != ORDALAB_STATUS_OK ||
      ordalab_padic_norm(r, 3, &zero, &exp) != ORDALAB_STATUS_OK) {
    fprintf(stderr, "p-adic norm failed: %s\n", ordalab_last_error());
    return 1;
  }
  printf("|9/8|_3 = 3^%lld\n", (long long)exp);
  ordalab_rational_free(r);

  st = ordalab_check("{\"structure\": \"Nope\", \"suite\": \"density\"}", &report);
  printf("unknown structure: status %d, %s\n", (int)st, ordalab_last_error());
  return st == ORDALAB_STATUS_UNKNOWN ? 0 : 1;
}
