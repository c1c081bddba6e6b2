#include <stdio.h>
#include <string.h>
#include "modrad.h"

int main(void) {
    ModradObject *obj = NULL;
    if (modrad_eval("sub(Zmod(4),[])", &obj) != MODRAD_STATUS_OK) return 10;
    char *witness = NULL;
    if (modrad_check(obj, "quasi_J", &witness) != MODRAD_STATUS_OK) return 11;
    if (modrad_check(obj, "J", &witness) != MODRAD_STATUS_FALSE) return 12;
    if (witness == NULL || strcmp(witness, "r=2, m=2\xcc\x84") != 0) return 13;
    modrad_string_free(witness);
    modrad_object_free(obj);
    if (modrad_eval("Zn(", &obj) != MODRAD_STATUS_PARSE_ERROR) return 14;
    if (modrad_last_error_message() == NULL) return 15;
    puts("ok");
    return 0;
}
