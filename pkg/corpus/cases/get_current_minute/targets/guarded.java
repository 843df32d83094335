public class Careful {
    int minutes;

    void read(android.widget.TimePicker picker) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            minutes = picker.getCurrentMinute();
        }
    }
}
