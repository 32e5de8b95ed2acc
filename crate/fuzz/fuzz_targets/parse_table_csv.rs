#![no_main]

use libfuzzer_sys::fuzz_target;
use monorees::asymptotics::LengthTable;

fuzz_target!(|data: &[u8]| {
    if let Ok(table) = LengthTable::read_csv(data) {
        let csv = table.to_csv_string();
        let again = LengthTable::read_csv(csv.as_bytes()).expect("written table reads back");
        assert_eq!(again, table);
    }
});
