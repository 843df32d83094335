public class AlarmForm {
    int minutes;

    void readBack(android.widget.TimePicker picker) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            minutes = picker.getMinute();
        } else {
            minutes = picker.getCurrentMinute();
        }
    }
}
