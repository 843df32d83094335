public class AlarmForm {
    int minutes;

    void readBack(android.widget.TimePicker picker) {
        minutes = picker.getCurrentMinute();
    }
}
